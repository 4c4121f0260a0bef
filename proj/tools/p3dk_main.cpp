// SPDX-License-Identifier: MIT

#include "p3dk/cli.hpp"

int main(int argc, char **argv) { return p3dk::cli::run(argc, argv); }
