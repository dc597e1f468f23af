#include <aoisched/acceptance.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::string level = "quick";
    std::vector<int> only;
    std::int64_t threads = 0;
    app.add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    app.add_option("--only", only, "Criteria to run")->delimiter(',');
    app.add_option("--threads", threads, "Worker threads (0: all cores)");
    CLI11_PARSE(app, argc, argv);

    aoisched::AcceptanceOptions opt;
    opt.level = level == "full" ? aoisched::VerifyLevel::Full : aoisched::VerifyLevel::Quick;
    opt.only = only;
    opt.threads = threads;
    opt.progress = &std::cout;
    const auto report = aoisched::run_acceptance(opt);
    std::size_t passed = 0;
    for (const auto& r : report.results) passed += r.pass ? 1 : 0;
    std::cout << passed << "/" << report.results.size() << " criteria passed\n";
    return report.all_pass() ? 0 : 1;
}
