#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) { return hkbase::cli::run(argc, argv, std::cout, std::cerr); }
