src/util.hpp
