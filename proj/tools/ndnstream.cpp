#include "ndnstream/cli.hpp"

#include <iostream>

int
main(int argc, char** argv)
{
  return ndnstream::cliMain(argc, argv, std::cout, std::cerr);
}
