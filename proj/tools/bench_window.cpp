#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gseed/errors.hpp"
#include "gseed/linear_forms.hpp"
#include "gseed/parallel.hpp"
#include "gseed/series.hpp"

/* Times the tail-form window kernel twice — once through the serial
 * reference loop, once through the parallel one — and cross-checks that
 * both produce bit-identical values.  The kernel is embarrassingly
 * parallel: each n gets its own coefficient stream copy, so the only
 * shared state is the read-only spec.
 */

using namespace gseed;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"window benchmark: serial reference vs parallel tail-form evaluation"};
    std::string spec_path, alpha_text = "1/2", window = "40:140";
    int S = 3, r = 1;
    long bits = 256;
    app.add_option("--spec", spec_path, "series spec file (default: built-in 1/(1-z))");
    app.add_option("--S", S, "number of shifted factors (default 3)");
    app.add_option("--r", r, "derivative order parameter (default 1)");
    app.add_option("--alpha", alpha_text, "evaluation point 1/alpha (default 1/2)");
    app.add_option("--window", window, "index window A:B (default 40:140)");
    app.add_option("--bits", bits, "working precision (default 256)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        GFunctionSpec spec;
        if (spec_path.empty()) {
            spec.op = parse_operator("(1 - z)*D - 1");
            spec.initial = {Rat(1)};
            spec.label = "polylog";
        } else {
            spec = load_spec(spec_path);
        }
        Rat alpha = rat_from_string(alpha_text);
        size_t colon = window.find(':');
        if (colon == std::string::npos) throw input_error("window must be A:B");
        long n1 = std::stol(window.substr(0, colon));
        long n2 = std::stol(window.substr(colon + 1));
        if (n1 > n2) throw input_error("window must satisfy A <= B");
        Rat z = Rat(1) / alpha;

        ThetaForm tf = theta_form(spec.op);
        long count = n2 - n1 + 1;
        std::vector<BigFloat> serial(count, BigFloat(0L, bits));
        std::vector<BigFloat> parallel(count, BigFloat(0L, bits));

        std::printf("spec=%s S=%d r=%d alpha=%s window=%ld..%ld bits=%ld\n",
                    spec.label.empty() ? "(file)" : spec.label.c_str(), S, r,
                    rat_to_string(alpha).c_str(), n1, n2, bits);

        auto t0 = std::chrono::steady_clock::now();
        {
            CoefficientStream A(tf, spec.initial);
            run_window_serial(0, count, [&](long i) {
                serial[i] = t_series(A, S, r, n1 + i, z, bits);
            });
        }
        double t_serial = seconds_since(t0);

        int workers = thread_budget();
        t0 = std::chrono::steady_clock::now();
        {
            std::vector<CoefficientStream> streams(workers, CoefficientStream(tf, spec.initial));
            run_window(0, count, [&](long i) {
                parallel[i] = t_series(streams[current_worker()], S, r, n1 + i, z, bits);
            });
        }
        double t_parallel = seconds_since(t0);

        long mismatches = 0;
        for (long i = 0; i < count; ++i)
            if (!(serial[i] == parallel[i])) ++mismatches;

        std::printf("%-10s %8s %12s %10s\n", "mode", "threads", "seconds", "speedup");
        std::printf("%-10s %8d %12.3f %10s\n", "serial", 1, t_serial, "1.00x");
        std::printf("%-10s %8d %12.3f %9.2fx\n", "parallel", workers, t_parallel,
                    t_parallel > 0 ? t_serial / t_parallel : 0.0);
        std::printf("identical results: %s (%ld forms)\n", mismatches == 0 ? "yes" : "NO",
                    count);
        if (mismatches != 0) {
            std::fprintf(stderr, "verification failure: %ld of %ld window values differ\n",
                         mismatches, count);
            return 2;
        }
        return 0;
    } catch (const input_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
