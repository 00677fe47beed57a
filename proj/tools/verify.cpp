// verify: run the verification suites and print a JSON report
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "lab/suites.hpp"

int main(int argc, char** argv) {
    lab::RunConfig cfg;
    std::vector<std::string> positional;

    CLI::App app{"Run verification suites; exit 0 if none failed, 1 on failure, 2 on bad usage"};
    app.add_option("suite_args", positional, "suites to run (" + [] {
        std::string s;
        for (const auto& n : lab::suite_names()) s += n + ", ";
        return s + "all)";
    }());
    app.add_option("--suite", cfg.suites, "suite to run (repeatable)")->envname("VERIFY_SUITE")->delimiter(',');
    app.add_option("--primes", cfg.primes, "comma separated odd primes")->envname("VERIFY_PRIMES")->delimiter(',');
    app.add_option("--order", cfg.order, "series order")->envname("VERIFY_ORDER");
    app.add_option("--tol", cfg.tol, "numeric tolerance")->envname("VERIFY_TOL");
    app.add_option("--radius2", cfg.radius2, "lattice radius squared, 0 = from tail bound")->envname("VERIFY_RADIUS2");
    app.add_option("--samples", cfg.samples, "sample points for numerical suites")->envname("VERIFY_SAMPLES");
    app.add_option("--out", cfg.out, "also write the JSON report here")->envname("VERIFY_OUT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cfg.suites.insert(cfg.suites.end(), positional.begin(), positional.end());

    std::vector<lab::Report> reports;
    try {
        lab::validate(cfg);
        reports = lab::run(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verify: internal error: " << e.what() << "\n";
        return 1;
    }

    const auto doc = lab::report_document(cfg, reports);
    std::cout << doc.dump(2) << "\n";
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out);
        if (!f) {
            std::cerr << "verify: cannot write " << cfg.out << "\n";
            return 2;
        }
        f << doc.dump(2) << "\n";
    }
    for (const auto& r : reports)
        std::fprintf(stderr, "%-12s %-9s %-10.3g %7.2fs  %s\n", r.suite.c_str(), r.status.c_str(), r.residual,
                     r.runtime, r.anchor.c_str());
    return lab::any_failed(reports) ? 1 : 0;
}
