#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace txcap::cli {

struct FigureRun {
    long long trials = 20000;
    std::uint64_t seed = 1;
    std::string out_dir = "figures";
    int workers = 0;
};

const std::vector<std::string>& figure_ids();
// Writes every panel of the figure; returns the csv paths.
std::vector<std::string> run_figure(const std::string& id, const FigureRun& run);

}  // namespace txcap::cli
