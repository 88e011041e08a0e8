lib/App.CS
