#include <iostream>

#include "formk1/cli.hpp"

int main(int argc, char** argv) { return formk1::cli::run(argc, argv, std::cout); }
