#ifndef FRAMESPLIT_GEN_HPP
#define FRAMESPLIT_GEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "framesplit/frame.hpp"
#include "framesplit/splitting.hpp"

namespace framesplit {

// Knobs for the deterministic frame generator.
struct GenConfig {
    int dim;                        // 2..64
    int count;                      // >= dim
    std::uint64_t seed = 0;
    double condition_cap = 1e4;     // max allowed B/A

    void validate() const;          // throws UsageError
};

// Frame with independent standard complex-Gaussian entries; regenerated on
// a derived stream until B/A <= condition_cap. Identical config, identical
// bits. Throws GenerationError after 100 rejections.
Frame random_frame(const GenConfig& cfg);

// to_parseval(random_frame(cfg)); bounds within 1e-9 of (1, 1).
Frame random_parseval(const GenConfig& cfg);

// Catalogue: "onb2", "double_onb2", "mb3", "weighted_onb".
Frame named_frame(const std::string& name);
std::vector<std::string> named_frame_catalogue();

// Each index included independently with probability 1/2.
IndexSubset random_subset(int universe, std::uint64_t seed);

// Complex-Gaussian vector normalized to unit norm.
std::vector<cplx> random_unit_vector(int dim, std::uint64_t seed);

// Direct (non-frame) split: S1, S2 = G G^H with Gaussian factors,
// S = S1 + S2; regenerated while lambda_min(S) is below the singularity
// floor.
SplitPair random_split_pair(int dim, std::uint64_t seed);

// General complex-Gaussian matrix, e.g. the non-normal U of the
// identity-pair checks.
ComplexMatrix random_complex_matrix(int rows, int cols, std::uint64_t seed,
                                    double scale = 1.0);

} // namespace framesplit

#endif
