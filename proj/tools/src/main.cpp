#include "run.hpp"

int main(int argc, char** argv) { return trimode::cli::dispatch(argc, argv); }
