#include "numsg_cli.hpp"

#include <csignal>

namespace {
std::atomic<bool> interrupted{false};

extern "C" void on_sigint(int) { interrupted.store(true); }
} // namespace

int main(int argc, char** argv)
{
	std::signal(SIGINT, on_sigint);
	return numsg::cli::run(argc, argv, std::cout, std::cerr, &interrupted);
}
