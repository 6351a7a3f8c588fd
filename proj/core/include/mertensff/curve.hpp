#ifndef MERTENSFF_CURVE_HPP
#define MERTENSFF_CURVE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mertensff/finite_field.hpp"

namespace mff {

// y^2 = f(x) with f monic squarefree of degree 2g+1 over a field of odd
// characteristic. The odd-degree model has exactly one point at infinity,
// which all counts include.
struct HyperellipticCurve {
    Field field;
    int g = 0;
    FFPoly f;

    static HyperellipticCurve make(Field field, FFPoly f);
    std::string text() const; // "y^2 = x^3 + x over GF(3)"
};

struct EnsembleSpec {
    enum class Mode { exhaustive, sampled };

    Field field;
    int g = 1;
    Mode mode = Mode::exhaustive;
    std::int64_t sample_count = 0; // sampled mode
    std::uint64_t seed = 0;
};

// #H_{2g+1,Q} = Q^(2g+1) - Q^(2g)
Int family_size(const Field& field, int g);

inline constexpr std::int64_t kDefaultEnumBudget = 10'000'000;

// #C(F_{Q^k}) = Q^k + 1 + sum_x chi(f(x)); k > 1 goes through a cached
// embedding of the definition field into F_{p^(e k)}.
std::int64_t point_count(const HyperellipticCurve& curve, int k,
                         std::int64_t budget = kDefaultEnumBudget);

// Streaming access to H_{2g+1,Q}. Exhaustive mode walks coefficient vectors
// of f - x^(2g+1) in base-Q counting order (c_0 least significant) and skips
// non-squarefree candidates; sampled mode draws i.i.d. uniform squarefree
// monic polynomials by rejection, one independent substream per sample index,
// so streams are reproducible and index ranges can be processed in parallel.
class FamilyEnumerator {
  public:
    explicit FamilyEnumerator(EnsembleSpec spec, std::int64_t budget = kDefaultEnumBudget);

    std::optional<HyperellipticCurve> next();

    // size of the index space: Q^(2g+1) for exhaustive, sample_count for sampled
    std::int64_t index_space() const { return total_; }
    std::uint64_t proposals() const { return proposals_; }
    std::uint64_t accepted() const { return accepted_; }

    // stateless lookups used by parallel scans
    static std::optional<HyperellipticCurve> curve_at(const EnsembleSpec& spec, std::int64_t index);
    static HyperellipticCurve sample_at(const EnsembleSpec& spec, std::int64_t sample_index,
                                        std::uint64_t* proposals = nullptr);

  private:
    EnsembleSpec spec_;
    std::int64_t total_ = 0;
    std::int64_t pos_ = 0;
    std::uint64_t proposals_ = 0, accepted_ = 0;
};

namespace detail {

// allocation-free helpers on coefficient index arrays (hot paths)
bool squarefree_idx(const FieldDesc& F, std::span<const std::int64_t> f);
std::int64_t affine_chi_sum(const FieldDesc& F, std::span<const std::int64_t> f);

// deterministic embedding of F_{p^e} into F_{p^(e*k)}: returns the big field
// and the images of 1, x, x^2, ..., x^(e-1)
struct Embedding {
    Field big;
    std::vector<std::int64_t> root_powers;
    std::int64_t embed(const FieldDesc& small, std::int64_t a) const;
};
const Embedding& embedding_for(const Field& small, int k);

} // namespace detail

} // namespace mff

#endif
