#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "treespec/graph.hpp"
#include "treespec/linalg.hpp"
#include "treespec/oracle.hpp"

namespace treespec {

// One claim per verifiable statement; each has an executable checker that
// returns a structured verdict over a single graph.
enum class Claim {
    EQ1_SHIFT,       // A(L(G)) + 2I = X^T X
    LEM_INVERT_D,    // invertible submatrices of the oriented incidence matrix
    LEM_INVERT_X,    // invertible submatrices of the unoriented incidence matrix
    THM_COEF,        // weighted-subgraph coefficient formulas for p_L, p_Q, p_L1, p_Q1
    LEM_PRINC,       // symmetric rank-r matrix has a full-rank principal r x r submatrix
    THM_DOOB,        // binary rank of A(L(G)) is n-1 (n odd) / n-2 (n even)
    THM_TPLUS1_Q,    // even integer eigenvalue of Q has multiplicity <= t+1
    THM_TPLUS1_LINE, // even integer eigenvalue != -2 of A(L(G)) has multiplicity <= t+1
    THM_MIN_BOUND,   // ... multiplicity <= min{t+1, e - 2*ceil(n/2) + 2}
    THM_NODD,        // n odd, 4 ∤ tau: constraints on even eigenvalues of L and Q
    THM_MULT2,       // even eigenvalue of L or Q with multiplicity >= 2 forces 4 | tau
    COR_UNICYCLIC,   // unicyclic with nullity(A(L(G))) = 2 has cycle length divisible by 4
    THM_GENERAL_L,   // generalized 2-adic constraints on Laplacian eigenvalues
    SNF_TAU,         // tau = product of the n-1 Smith invariant factors of L
    MATRIX_TREE,     // all cofactors of L equal tau; |l_{n-1}| = n*tau; brute count agrees
};

enum class Status { HOLDS, VIOLATED, NOT_APPLICABLE };

const char* to_string(Claim claim);
const char* to_string(Status status);
std::optional<Claim> claim_from_string(const std::string& name);
const std::vector<Claim>& all_claims();

struct Verdict {
    Claim claim;
    Status status;
    bool tight = false;          // bound met with equality (where a bound exists)
    nlohmann::json witness;      // reproducible evidence; complete on VIOLATED
    std::string graph6;
};

// Shared read-mostly memo of characteristic polynomials keyed by graph6
// string. Checkers recompute everything else from the graph.
class CharPolyMemo {
public:
    struct Polys {
        IntPolynomial laplacian;
        IntPolynomial signless;
    };
    // Computes (outside the lock) and caches char polys of L(g) and Q(g).
    std::shared_ptr<const Polys> get(const Graph& g);

private:
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const Polys>> cache_;
};

struct CheckOptions {
    CharPolyMemo* memo = nullptr;
    std::uint64_t pair_seed = 0;   // seeds the sampled (R,S) pairs of the lemma checkers
    int pair_samples = 1000;
    int exhaustive_pair_max_size = 4;  // |R| = |S| <= this in exhaustive mode
    int exhaustive_edge_limit = 6;     // exhaustive iff e(g) <= this
};

// --- single-statement checkers ------------------------------------------------

Verdict check_eq1_shift(const Graph& g, const CheckOptions& opts = {});

// Pair-level lemma checks: is det(M(R,S)) nonzero exactly when the lemma's
// structural conditions hold, with the stated determinant value.
Verdict check_lemma_invertD(const Graph& g, const Orientation& o, const std::vector<int>& R,
                            const std::vector<int>& S);
Verdict check_lemma_invertX(const Graph& g, const std::vector<int>& R, const std::vector<int>& S);

// Corpus-level wrappers: exhaustive over all (R,S) with |R| = |S| <= 4 for
// small graphs, seeded random pairs otherwise.
Verdict check_lemma_invertD_corpus(const Graph& g, const CheckOptions& opts = {});
Verdict check_lemma_invertX_corpus(const Graph& g, const CheckOptions& opts = {});

Verdict check_coef_theorem(const Graph& g, const CheckOptions& opts = {});
Verdict check_lemma_princ(const Graph& g, const CheckOptions& opts = {});
Verdict check_doob(const Graph& g, const CheckOptions& opts = {});
Verdict check_tplus1_Q(const Graph& g, const CheckOptions& opts = {});
Verdict check_tplus1_line(const Graph& g, const CheckOptions& opts = {});
Verdict check_min_bound(const Graph& g, const CheckOptions& opts = {});
Verdict check_nodd(const Graph& g, const CheckOptions& opts = {});
Verdict check_mult2(const Graph& g, const CheckOptions& opts = {});
Verdict check_unicyclic_corollary(const Graph& g, const CheckOptions& opts = {});
Verdict check_general_laplacian(const Graph& g, const CheckOptions& opts = {});
Verdict check_snf_tau(const Graph& g, const CheckOptions& opts = {});
Verdict check_matrix_tree(const Graph& g, const CheckOptions& opts = {});

Verdict run_check(Claim claim, const Graph& g, const CheckOptions& opts = {});

// tau via the Matrix-Tree theorem (det of L with row/col 0 deleted).
BigInt spanning_tree_count(const Graph& g);

}  // namespace treespec
