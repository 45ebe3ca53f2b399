#include <cstdio>
#include <vector>

#include <CLI11.hpp>

#include <entropygraph/checks.hpp>

namespace ck = entropygraph::checks;

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> only;
    std::uint64_t seed = ck::kDefaultSeed;
    app.add_option("--only", only, "criterion ids to run (default all)");
    app.add_option("--seed", seed, "base seed");
    CLI11_PARSE(app, argc, argv);
    if (only.empty())
        only = ck::check_ids();

    int failed = 0;
    for (int id : only) {
        const auto r = ck::run_check(id, seed);
        std::printf("%s\n", ck::format_line(r).c_str());
        std::fflush(stdout);
        failed += !r.pass;
    }
    return failed ? 1 : 0;
}
