#include <iostream>
#include <string>
#include <vector>

#include "hcong/cli.hpp"

int main(int argc, char *argv[])
{
	std::vector<std::string> args(argv, argv + argc);
	return hcong::run_cli(args, std::cout, std::cerr);
}
