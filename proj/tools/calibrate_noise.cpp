// Grid search for the frozen default noise parameters: finds (p1, p2,
// p_read) whose sampled P(0) best matches the reference run statistics of
// the generation circuit (target 0.755) and the verification circuit
// (target 0.846), then reports the in-band margins at 8192 shots across a
// few seeds.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "qcheque/experiments.hpp"
#include "qcheque/noise.hpp"

using namespace qcheque;

namespace {

constexpr double kTargetGeneration = 0.755;
constexpr double kTargetVerification = 0.846;

double p0_of(const Circuit& c, const NoiseParams& n, uint64_t shots, uint64_t seed) {
    return noisy_sample(c, shots, seed, n).prob_of("0");
}

double score(const Circuit& gen, const Circuit& ver, const NoiseParams& n, uint64_t shots,
             uint64_t seed) {
    const double a = p0_of(gen, n, shots, seed) - kTargetGeneration;
    const double b = p0_of(ver, n, shots, derive_seed(seed, 1)) - kTargetVerification;
    return a * a + b * b;
}

} // namespace

int main() {
    const Circuit gen = cheque_generation_measured();
    const Circuit ver = cheque_verification_circuit();
    const uint64_t seed = 97;

    NoiseParams best;
    double best_score = 1e18;

    // Coarse pass.
    std::printf("coarse grid (50k shots per point)...\n");
    for (double p1 = 0.0; p1 <= 0.0121; p1 += 0.002)
        for (double p2 = 0.0; p2 <= 0.0301; p2 += 0.004)
            for (double pr = 0.0; pr <= 0.081; pr += 0.01) {
                NoiseParams n{p1, p2, pr};
                const double s = score(gen, ver, n, 50000, seed);
                if (s < best_score) {
                    best_score = s;
                    best = n;
                    std::printf("  p1=%.4f p2=%.4f p_read=%.4f  score=%.6g\n", p1, p2, pr, s);
                }
            }

    // Refinement around the coarse optimum.
    std::printf("refining (200k shots per point)...\n");
    NoiseParams coarse = best;
    best_score = 1e18;
    for (double p1 = std::max(0.0, coarse.p1 - 0.002); p1 <= coarse.p1 + 0.0021; p1 += 0.001)
        for (double p2 = std::max(0.0, coarse.p2 - 0.004); p2 <= coarse.p2 + 0.0041; p2 += 0.002)
            for (double pr = std::max(0.0, coarse.p_read - 0.01); pr <= coarse.p_read + 0.0101;
                 pr += 0.002) {
                NoiseParams n{p1, p2, pr};
                const double s = score(gen, ver, n, 200000, derive_seed(seed, 7));
                if (s < best_score) {
                    best_score = s;
                    best = n;
                    std::printf("  p1=%.4f p2=%.4f p_read=%.4f  score=%.6g\n", p1, p2, pr, s);
                }
            }

    std::printf("\nbest: p1=%.4f p2=%.4f p_read=%.4f\n", best.p1, best.p2, best.p_read);

    std::printf("\n8192-shot checks (bands: generation [0.73, 0.78], verification [0.80, 0.87]):\n");
    for (uint64_t s : std::vector<uint64_t>{11, 12, 13, 14, 15, 20250814}) {
        const double g = p0_of(gen, best, 8192, derive_seed(s, 100));
        const double v = p0_of(ver, best, 8192, derive_seed(s, 101));
        std::printf("  seed %-10llu generation %.4f %s  verification %.4f %s\n",
                    static_cast<unsigned long long>(s), g,
                    g >= 0.73 && g <= 0.78 ? "ok " : "OUT", v,
                    v >= 0.80 && v <= 0.87 ? "ok " : "OUT");
    }
    return 0;
}
