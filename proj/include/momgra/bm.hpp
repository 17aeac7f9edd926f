#ifndef MOMGRA_BM_HPP
#define MOMGRA_BM_HPP

#include <map>
#include <string>

#include "momgra/gsheaf.hpp"

namespace momgra {

struct BMOptions {
    int cutoff = -1;          // -1: per-vertex policy
    bool reverse_ties = false;  // alternative tie-breaking (determinism checks)
};

struct BMRow {
    std::string vertex;
    int rank = 0;
    std::vector<int> degrees;
    std::int64_t kl_at_one = 0;
    std::string kl;           // h_{x,w} as a Laurent polynomial
    std::string graded_rank;  // sum of v^d over stalk generators; reported
                              // next to kl as a diagnostic, never asserted
    bool match = false;
};

struct BMResult {
    MGSheaf sheaf;
    Field field;
    std::string w;
    std::vector<BMRow> table;  // filled by verify_conjecture
    bool match = true;
};

// The canonical sheaf on G_{<= w}, built by descending induction: rank one
// at the top, then at each vertex the projective cover of the image of the
// sections above it in the product of the up-edge stalks.
MGSheaf bm_sheaf(std::shared_ptr<const Weyl> w, const Elem& top, const Field& F,
                 const BMOptions& opt = {});

// Post-hoc check of the three defining properties of the canonical sheaf.
void check_bm_properties(const MGSheaf& s);

// Stalk ranks against the self-dual basis coefficients at v = 1.
BMResult verify_conjecture(std::shared_ptr<const Weyl> w, const Elem& top, const Field& F,
                           const BMOptions& opt = {});

std::vector<Elem> smooth_locus(const MGSheaf& s);
bool check_mone(const BMResult& r);

struct PrimeScanEntry {
    bool gkm_rejected = false;
    bool ran = false;
    bool matches_rational = false;
    std::string error;
    std::map<std::string, int> ranks;
};

// Per prime: GKM gate, then the algorithm and a comparison against the
// rational ranks. Errors are recorded per prime, never thrown.
std::map<long, PrimeScanEntry> prime_scan(std::shared_ptr<const Weyl> w, const Elem& top,
                                          const std::vector<long>& primes, int jobs = 1,
                                          const BMOptions& opt = {});

}  // namespace momgra

#endif
