#include "neu/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  return neu::cli::run(argc, argv, std::cout, std::cerr);
}
