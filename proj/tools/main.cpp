#include <iostream>

#include "sympbw/cli.hpp"

int main(int argc, char** argv) { return sympbw::dispatch(argc, argv, std::cout, std::cerr); }
