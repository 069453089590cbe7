#include <string>
#include <vector>

#include "fracsub/cli.hpp"

int main(int argc, char** argv)
{
    return fracsub::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
