// Writes the config and event-stream files the CLI smoke tests consume.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "core/config.hpp"
#include "core/stimulus.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: gen_fixtures <output-dir>\n");
        return 1;
    }
    std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);

    loki::save_config_file(loki::bench_config(), (dir / "zero.cfg").string());
    loki::save_config_file(loki::random_config(17), (dir / "rand.cfg").string());

    std::ofstream events(dir / "small.aer");
    events << "# small two-timestep stream\nS 0\nS 5\nS 250\nT\nS 1\nT\n";
    if (!events) {
        std::fprintf(stderr, "cannot write fixtures under %s\n", argv[1]);
        return 1;
    }
    return 0;
}
