#include <iostream>

#include "tricon/commands.hpp"

int main(int argc, char** argv)
{
    return tricon::cli::run(argc, argv, std::cout, std::cerr);
}
