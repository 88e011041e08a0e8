src/Widget.CPP
