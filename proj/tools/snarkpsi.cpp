#include <iostream>

#include "snarkpsi/cli.hpp"

int main(int argc, char** argv)
{
    return snark::cli::run_cli(argc, argv, std::cout, std::cerr);
}
