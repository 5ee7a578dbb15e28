#include "rbjordan/rbindex.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "rbjordan/constructions.hpp"
#include "rbjordan/errors.hpp"

namespace rbjordan {
namespace {

// ---------------------------------------------------------------------------
// Raw enumeration engines. Everything below works on plain machine integers
// (residues in [0, p)) so the inner loops never touch Scalar; operators are
// materialized only for survivors.
// ---------------------------------------------------------------------------

constexpr std::size_t kDimCap = kMaxN + 1;
// Hard ceiling on stored candidate columns across all lists; beyond it the
// instance has no realistic chance of finishing anyway.
constexpr std::size_t kListCap = 2'000'000;

using Column = std::array<int, kDimCap>; // slot 0 = unit coefficient
using RawOp = std::array<Column, kDimCap>; // RawOp[j] = coordinates of R(b_j)

struct RawCtx {
    int p = 0;
    int dim = 0;                      // n + 1
    std::array<long long, kDimCap> d{}; // form residues, slots 1..dim-1
};

RawCtx make_ctx(const CliffordAlgebra& algebra) {
    RawCtx C;
    C.p = algebra.field().p();
    C.dim = static_cast<int>(algebra.dim());
    for (int t = 1; t < C.dim; ++t) {
        C.d[static_cast<std::size_t>(t)] = algebra.form().d(static_cast<std::size_t>(t) - 1).residue();
    }
    return C;
}

int mod_reduce(long long v, int p) {
    v %= p;
    return static_cast<int>(v < 0 ? v + p : v);
}

int mod_inverse(int a, int p) {
    // p is a small prime, a != 0 mod p.
    int result = 1;
    long long base = a % p;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = mod_reduce(result * base, p);
        base = mod_reduce(base * base, p) * 1LL;
    }
    return result;
}

bool column_is_zero(const RawCtx& C, const Column& c) {
    for (int r = 0; r < C.dim; ++r) {
        if (c[static_cast<std::size_t>(r)] != 0) return false;
    }
    return true;
}

// x o y with x = x0.1 + sum x_t e_t: the unit slot picks up the pairing.
Column jprod(const RawCtx& C, const Column& x, const Column& y) {
    Column z{};
    long long s = 1LL * x[0] * y[0];
    for (int t = 1; t < C.dim; ++t) {
        s += C.d[static_cast<std::size_t>(t)] * x[static_cast<std::size_t>(t)] * y[static_cast<std::size_t>(t)];
    }
    z[0] = mod_reduce(s, C.p);
    for (int t = 1; t < C.dim; ++t) {
        z[static_cast<std::size_t>(t)] = mod_reduce(
            1LL * x[0] * y[static_cast<std::size_t>(t)] + 1LL * y[0] * x[static_cast<std::size_t>(t)], C.p);
    }
    return z;
}

// x o e_j for j >= 1 (x o 1 is x itself, handled by callers).
Column jprod_basis(const RawCtx& C, const Column& x, int j) {
    Column z{};
    z[0] = mod_reduce(C.d[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)], C.p);
    z[static_cast<std::size_t>(j)] = x[0];
    return z;
}

// R(x) = sum x_t R(b_t), all columns assumed assigned.
Column apply_raw(const RawCtx& C, const RawOp& cols, const Column& x) {
    Column z{};
    for (int r = 0; r < C.dim; ++r) {
        long long s = 0;
        for (int t = 0; t < C.dim; ++t) {
            s += 1LL * x[static_cast<std::size_t>(t)] * cols[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)];
        }
        z[static_cast<std::size_t>(r)] = mod_reduce(s, C.p);
    }
    return z;
}

// Defining identity R(b_i)R(b_j) = R(R(b_i) b_j + b_i R(b_j)) on all
// unordered basis pairs; bilinearity makes that sufficient.
bool raw_is_rb(const RawCtx& C, const RawOp& cols) {
    for (int i = 0; i < C.dim; ++i) {
        for (int j = i; j < C.dim; ++j) {
            const Column& ci = cols[static_cast<std::size_t>(i)];
            const Column& cj = cols[static_cast<std::size_t>(j)];
            Column t1 = (j == 0) ? ci : jprod_basis(C, ci, j);
            Column t2 = (i == 0) ? cj : jprod_basis(C, cj, i);
            Column inner{};
            for (int r = 0; r < C.dim; ++r) {
                inner[static_cast<std::size_t>(r)] =
                    mod_reduce(t1[static_cast<std::size_t>(r)] + t2[static_cast<std::size_t>(r)], C.p);
            }
            if (jprod(C, ci, cj) != apply_raw(C, cols, inner)) return false;
        }
    }
    return true;
}

// Smallest s <= dim + 1 with R^s = 0; 0 when none was found (cannot happen
// for a verified RB-operator, and the census would expose it loudly).
unsigned raw_nilpotency(const RawCtx& C, const RawOp& cols) {
    RawOp cur = cols;
    for (int s = 1; s <= C.dim + 1; ++s) {
        bool zero = true;
        for (int j = 0; j < C.dim && zero; ++j) {
            zero = column_is_zero(C, cur[static_cast<std::size_t>(j)]);
        }
        if (zero) return static_cast<unsigned>(s);
        RawOp nxt{};
        for (int j = 0; j < C.dim; ++j) {
            nxt[static_cast<std::size_t>(j)] = apply_raw(C, cols, cur[static_cast<std::size_t>(j)]);
        }
        cur = nxt;
    }
    return 0;
}

// Row-major entry order; drives every witness tie-break.
bool raw_lex_less(const RawCtx& C, const RawOp& a, const RawOp& b) {
    for (int r = 0; r < C.dim; ++r) {
        for (int c = 0; c < C.dim; ++c) {
            int av = a[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
            int bv = b[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
            if (av != bv) return av < bv;
        }
    }
    return false;
}

struct Accum {
    std::map<unsigned, std::uint64_t> counts;
    bool have_best = false;
    unsigned best_index = 0;
    RawOp best{};
    std::vector<RawOp> collected;
    std::uint64_t nodes = 0;
};

void record(const RawCtx& C, const SearchConfig& cfg, Accum& acc, const RawOp& cols) {
    unsigned s = raw_nilpotency(C, cols);
    ++acc.counts[s];
    if (!acc.have_best || s > acc.best_index ||
        (s == acc.best_index && raw_lex_less(C, cols, acc.best))) {
        acc.have_best = true;
        acc.best_index = s;
        acc.best = cols;
    }
    if (cfg.collect_operators) acc.collected.push_back(cols);
}

void merge(const RawCtx& C, Accum& into, const Accum& from) {
    for (const auto& [idx, cnt] : from.counts) into.counts[idx] += cnt;
    if (from.have_best &&
        (!into.have_best || from.best_index > into.best_index ||
         (from.best_index == into.best_index && raw_lex_less(C, from.best, into.best)))) {
        into.have_best = true;
        into.best_index = from.best_index;
        into.best = from.best;
    }
    into.collected.insert(into.collected.end(), from.collected.begin(), from.collected.end());
    into.nodes += from.nodes;
}

std::string census_text(const std::map<unsigned, std::uint64_t>& counts) {
    if (counts.empty()) return "none";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, cnt] : counts) {
        if (!first) out << ", ";
        first = false;
        out << idx << ": " << cnt;
    }
    return out.str();
}

[[noreturn]] void throw_budget(const Accum& acc, const std::string& where) {
    throw BudgetExceeded("search budget exhausted " + where +
                         "; partial (non-certifying) census: " + census_text(acc.counts));
}

// p^exp clamped so comparisons against the budget never overflow.
std::uint64_t clamped_power(int p, int exp) {
    std::uint64_t v = 1;
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 128;
    for (int i = 0; i < exp; ++i) {
        if (v > cap) return std::numeric_limits<std::uint64_t>::max();
        v *= static_cast<std::uint64_t>(p);
    }
    return v;
}

// ---------------------------------------------------------------------------
// Naive engine: walk every matrix in lexicographic order, test the identity
// with early exit. Deliberately shares no pruning logic with the DFS below so
// the two engines stay independent oracles for one another.
// ---------------------------------------------------------------------------

void naive_scan(const RawCtx& C, const SearchConfig& cfg, Accum& acc) {
    const int cells = C.dim * C.dim;
    std::uint64_t total = clamped_power(C.p, cells);
    if (total > cfg.max_naive_space) {
        std::ostringstream out;
        out << "naive candidate space p^(dim^2) = " << C.p << "^" << cells
            << " exceeds the budget of " << cfg.max_naive_space
            << "; partial (non-certifying) census: none";
        throw BudgetExceeded(out.str());
    }
    RawOp cols{};
    while (true) {
        ++acc.nodes;
        if (raw_is_rb(C, cols)) record(C, cfg, acc, cols);
        int i = cells - 1;
        while (i >= 0) {
            auto j = static_cast<std::size_t>(i / C.dim);
            auto r = static_cast<std::size_t>(i % C.dim);
            if (++cols[j][r] < C.p) break;
            cols[j][r] = 0;
            --i;
        }
        if (i < 0) break;
    }
}

// ---------------------------------------------------------------------------
// Pruned engine: depth-first over columns, R(1) first. Partial assignments
// are rejected only through proven necessary conditions on weight-0
// RB-operators plus instances of the defining identity that the assigned
// columns already determine, so the traversal still visits every operator.
// ---------------------------------------------------------------------------

long long vector_pairing(const RawCtx& C, const Column& a, const Column& b) {
    long long s = 0;
    for (int t = 1; t < C.dim; ++t) {
        s += C.d[static_cast<std::size_t>(t)] * a[static_cast<std::size_t>(t)] * b[static_cast<std::size_t>(t)];
    }
    return mod_reduce(s, C.p);
}

// Norm of a column vanishes: (gamma, gamma) = alpha^2. Holds for every
// column of a weight-0 RB-operator because 1 never lies in the image while
// R(x)^2 always does.
bool column_norm_ok(const RawCtx& C, const Column& c) {
    return vector_pairing(C, c, c) == mod_reduce(1LL * c[0] * c[0], C.p);
}

struct LevelLists {
    std::vector<Column> branch_a;              // candidates for any column, R(1) = 0 branch
    std::vector<std::vector<Column>> branch_b; // per level j, R(1) != 0 branch
    std::vector<Column> cone;                  // candidates for R(1) in that branch
};

template <class Keep>
void scan_columns(const RawCtx& C, Keep&& keep) {
    Column c{};
    while (true) {
        keep(static_cast<const Column&>(c));
        int i = C.dim - 1;
        while (i >= 0) {
            if (++c[static_cast<std::size_t>(i)] < C.p) break;
            c[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
}

LevelLists build_lists(const RawCtx& C, const SearchConfig& cfg) {
    LevelLists L;
    std::size_t stored = 0;
    auto push_capped = [&stored](std::vector<Column>& vec, const Column& c) {
        if (++stored > kListCap) {
            throw BudgetExceeded(
                "candidate column lists exceed the in-memory cap; the instance is too large "
                "for a complete search; partial (non-certifying) census: none");
        }
        vec.push_back(c);
    };
    scan_columns(C, [&](const Column& c) {
        if (cfg.cut_column_structure && !column_norm_ok(C, c)) return;
        push_capped(L.branch_a, c);
    });
    L.branch_b.resize(static_cast<std::size_t>(C.dim));
    for (int j = 1; j < C.dim; ++j) {
        scan_columns(C, [&](const Column& c) {
            if (cfg.cut_column_structure &&
                (c[static_cast<std::size_t>(j)] != 0 || !column_norm_ok(C, c))) {
                return;
            }
            push_capped(L.branch_b[static_cast<std::size_t>(j)], c);
        });
    }
    scan_columns(C, [&](const Column& c) {
        if (column_is_zero(C, c)) return;
        if (cfg.cut_isotropic_r1 && (c[0] != 0 || vector_pairing(C, c, c) != 0)) return;
        push_capped(L.cone, c);
    });
    return L;
}

class PrunedDfs {
public:
    PrunedDfs(const RawCtx& C, const SearchConfig& cfg, const LevelLists& L, Accum& acc)
        : C_(C), cfg_(cfg), L_(L), acc_(acc) {
        inv_.fill(0);
        for (int a = 1; a < C.p; ++a) inv_[static_cast<std::size_t>(a)] = mod_inverse(a, C.p);
    }

    // R(1) = 0: the operator squares to zero, so its image sits inside its
    // kernel and the rank is at most dim/2.
    void run_r1_zero() {
        cols_ = RawOp{};
        r1_nonzero_ = false;
        rank_bound_ = static_cast<std::size_t>(C_.dim / 2);
        echelon_.clear();
        dfs(1);
    }

    // R(1) = w != 0: column structure and pair couplings apply, and the
    // kernel still has dimension at least 2.
    void run_r1_nonzero(const Column& w) {
        cols_ = RawOp{};
        cols_[0] = w;
        r1_nonzero_ = true;
        rank_bound_ = static_cast<std::size_t>(C_.dim - 2);
        echelon_.clear();
        echelon_push(w);
        bump_node("while seeding R(1) candidates");
        dfs(1);
    }

private:
    void bump_node(const char* where) {
        if (++acc_.nodes > cfg_.max_naive_space) throw_budget(acc_, where);
    }

    void dfs(int m) {
        if (m == C_.dim) {
            if (raw_is_rb(C_, cols_)) record(C_, cfg_, acc_, cols_);
            return;
        }
        // Unit propagation: when an assigned column has support reaching
        // exactly to m, the pinned second iterate solves column m outright
        // (R applied to that column is 0, or -d_j w_j R(1) when R(1) != 0),
        // so a single candidate remains.
        if (cfg_.cut_pair_relations) {
            for (int j = 1; j < m; ++j) {
                const Column& cj = cols_[static_cast<std::size_t>(j)];
                if (max_support(cj) != m) continue;
                long long scale =
                    C_.p - inv_[static_cast<std::size_t>(cj[static_cast<std::size_t>(m)])];
                Column forced{};
                for (int r = 0; r < C_.dim; ++r) {
                    long long acc = 0;
                    for (int t = 1; t < m; ++t) {
                        acc += 1LL * cj[static_cast<std::size_t>(t)] *
                               cols_[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)];
                    }
                    if (r1_nonzero_) {
                        acc += C_.d[static_cast<std::size_t>(j)] * cols_[0][static_cast<std::size_t>(j)] *
                               cols_[0][static_cast<std::size_t>(r)];
                    }
                    forced[static_cast<std::size_t>(r)] = mod_reduce(acc * scale, C_.p);
                }
                if (candidate_admissible(m, forced)) try_candidate(m, forced);
                return;
            }
        }
        // Once the image span is saturated, later columns must be linear
        // combinations of the recorded basis; enumerating those directly is
        // far cheaper than rescanning the candidate list.
        if (cfg_.cut_pair_relations && echelon_.size() == rank_bound_) {
            std::vector<int> coeff(rank_bound_, 0);
            Column c{};
            while (true) {
                if (candidate_admissible(m, c)) try_candidate(m, c);
                std::size_t i = rank_bound_;
                while (i > 0) {
                    if (++coeff[i - 1] < C_.p) break;
                    coeff[i - 1] = 0;
                    --i;
                }
                if (i == 0) break;
                c = Column{};
                for (std::size_t b = 0; b < rank_bound_; ++b) {
                    if (coeff[b] == 0) continue;
                    const Column& v = echelon_[b].second;
                    for (int t = 0; t < C_.dim; ++t) {
                        c[static_cast<std::size_t>(t)] = mod_reduce(
                            c[static_cast<std::size_t>(t)] + 1LL * coeff[b] * v[static_cast<std::size_t>(t)],
                            C_.p);
                    }
                }
            }
            return;
        }
        const std::vector<Column>& candidates =
            r1_nonzero_ ? L_.branch_b[static_cast<std::size_t>(m)] : L_.branch_a;
        for (const Column& c : candidates) {
            if (!column_cuts(m, c)) continue;
            try_candidate(m, c);
        }
    }

    // List-level conditions re-applied to span-generated candidates, which
    // bypass the precomputed lists.
    bool candidate_admissible(int m, const Column& c) const {
        if (cfg_.cut_column_structure) {
            if (!column_norm_ok(C_, c)) return false;
            if (r1_nonzero_ && c[static_cast<std::size_t>(m)] != 0) return false;
        }
        return column_cuts(m, c);
    }

    void try_candidate(int m, const Column& c) {
        bool pushed = false;
        if (cfg_.cut_pair_relations && !column_is_zero(C_, c)) {
            if (echelon_push(c)) {
                if (echelon_.size() > rank_bound_) {
                    echelon_.pop_back();
                    return;
                }
                pushed = true;
            }
        }
        cols_[static_cast<std::size_t>(m)] = c;
        bump_node("while extending a partial operator");
        if (decidable_checks(m)) dfs(m + 1);
        cols_[static_cast<std::size_t>(m)] = Column{};
        if (pushed) echelon_.pop_back();
    }

    // Cuts that look only at the candidate and columns already fixed.
    bool column_cuts(int m, const Column& c) const {
        if (!r1_nonzero_) return true;
        if (cfg_.cut_column_structure) {
            // (R(1), gamma) = 0 for every column when R(1) != 0.
            if (vector_pairing(C_, cols_[0], c) != 0) return false;
        }
        if (cfg_.cut_pair_relations) {
            for (int i = 1; i < m; ++i) {
                const Column& ci = cols_[static_cast<std::size_t>(i)];
                // d_m (c_i)_m + d_i (c_m)_i = 0 coupling between columns.
                long long coupled = C_.d[static_cast<std::size_t>(m)] * ci[static_cast<std::size_t>(m)] +
                                    C_.d[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(i)];
                if (mod_reduce(coupled, C_.p) != 0) return false;
                // (gamma_i, gamma_m) = alpha_i alpha_m.
                if (vector_pairing(C_, ci, c) != mod_reduce(1LL * ci[0] * c[0], C_.p)) return false;
            }
        }
        return true;
    }

    int max_support(const Column& c) const {
        int s = 0;
        for (int t = 1; t < C_.dim; ++t) {
            if (c[static_cast<std::size_t>(t)] != 0) s = t;
        }
        return s;
    }

    // Checks that become fully determined once column m is fixed. Each one
    // is an instance of the defining identity or of the pinned second
    // iterate (R^2(e_j) = 0 when R(1) = 0, = -d_j w_j R(1) otherwise), so
    // failing candidates can never extend to an RB-operator.
    bool decidable_checks(int m) {
        if (cfg_.cut_pair_relations) {
            for (int j = 1; j <= m; ++j) {
                const Column& cj = cols_[static_cast<std::size_t>(j)];
                int s = max_support(cj);
                if (s > m || std::max(j, s) != m) continue; // not newly determined
                for (int r = 0; r < C_.dim; ++r) {
                    long long acc = 0;
                    for (int t = 1; t < C_.dim; ++t) {
                        acc += 1LL * cj[static_cast<std::size_t>(t)] *
                               cols_[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)];
                    }
                    if (r1_nonzero_) {
                        acc += C_.d[static_cast<std::size_t>(j)] * cols_[0][static_cast<std::size_t>(j)] *
                               cols_[0][static_cast<std::size_t>(r)];
                    }
                    if (mod_reduce(acc, C_.p) != 0) return false;
                }
            }
        }
        for (int i = 0; i <= m; ++i) {
            for (int j = i; j <= m; ++j) {
                const Column& ci = cols_[static_cast<std::size_t>(i)];
                const Column& cj = cols_[static_cast<std::size_t>(j)];
                Column t1 = (j == 0) ? ci : jprod_basis(C_, ci, j);
                Column t2 = (i == 0) ? cj : jprod_basis(C_, cj, i);
                Column inner{};
                for (int r = 0; r < C_.dim; ++r) {
                    inner[static_cast<std::size_t>(r)] =
                        mod_reduce(t1[static_cast<std::size_t>(r)] + t2[static_cast<std::size_t>(r)], C_.p);
                }
                int s = max_support(inner);
                if (s > m) continue; // R(inner) still involves open columns
                bool known_before = (i == 0 || i <= m - 1) && (j == 0 || j <= m - 1) && s <= m - 1;
                if (known_before) continue; // already verified at an earlier level
                Column rhs{};
                for (int r = 0; r < C_.dim; ++r) {
                    long long acc = 1LL * inner[0] * cols_[0][static_cast<std::size_t>(r)];
                    for (int t = 1; t < C_.dim; ++t) {
                        acc += 1LL * inner[static_cast<std::size_t>(t)] *
                               cols_[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)];
                    }
                    rhs[static_cast<std::size_t>(r)] = mod_reduce(acc, C_.p);
                }
                if (jprod(C_, ci, cj) != rhs) return false;
            }
        }
        return true;
    }

    Column echelon_reduce(const Column& c) const {
        Column r = c;
        for (const auto& [piv, v] : echelon_) {
            int f = r[static_cast<std::size_t>(piv)];
            if (f == 0) continue;
            for (int t = 0; t < C_.dim; ++t) {
                r[static_cast<std::size_t>(t)] = mod_reduce(
                    r[static_cast<std::size_t>(t)] - 1LL * f * v[static_cast<std::size_t>(t)], C_.p);
            }
        }
        return r;
    }

    // Returns whether c enlarged the span (false: dependent, nothing stored).
    bool echelon_push(const Column& c) {
        Column r = echelon_reduce(c);
        int piv = -1;
        for (int t = 0; t < C_.dim; ++t) {
            if (r[static_cast<std::size_t>(t)] != 0) {
                piv = t;
                break;
            }
        }
        if (piv < 0) return false;
        long long f = inv_[static_cast<std::size_t>(r[static_cast<std::size_t>(piv)])];
        for (int t = 0; t < C_.dim; ++t) {
            r[static_cast<std::size_t>(t)] = mod_reduce(r[static_cast<std::size_t>(t)] * f, C_.p);
        }
        echelon_.emplace_back(piv, r);
        return true;
    }

    const RawCtx& C_;
    const SearchConfig& cfg_;
    const LevelLists& L_;
    Accum& acc_;
    std::array<int, 128> inv_{};
    RawOp cols_{};
    bool r1_nonzero_ = false;
    std::size_t rank_bound_ = 0;
    std::vector<std::pair<int, Column>> echelon_;
};

void pruned_scan_range(const RawCtx& C, const SearchConfig& cfg, const LevelLists& L,
                       bool with_r1_zero, std::size_t cone_begin, std::size_t cone_end,
                       Accum& acc) {
    PrunedDfs dfs(C, cfg, L, acc);
    if (with_r1_zero) dfs.run_r1_zero();
    for (std::size_t i = cone_begin; i < cone_end; ++i) dfs.run_r1_nonzero(L.cone[i]);
}

LinOperator materialize(const CliffordAlgebra& algebra, const RawOp& cols) {
    ScalarMatrix M(algebra.field(), algebra.dim(), algebra.dim());
    for (std::size_t c = 0; c < algebra.dim(); ++c) {
        for (std::size_t r = 0; r < algebra.dim(); ++r) {
            M.at(r, c) = Scalar::of_int(algebra.field(), cols[c][r]);
        }
    }
    return LinOperator(algebra, M);
}

// ---------------------------------------------------------------------------
// Closed-form verdicts and their witnesses.
// ---------------------------------------------------------------------------

// The same coefficients re-read as exact rationals; symbolic entries are
// stored as rational literals, so this is lossless.
CliffordAlgebra rational_twin(const BilinearForm& form) {
    Field q = Field::rationals();
    std::vector<Scalar> d;
    d.reserve(form.size());
    for (const Scalar& s : form.coeffs()) d.push_back(Scalar::parse(q, s.str()));
    return CliffordAlgebra(q, BilinearForm(std::move(d)));
}

std::optional<LinOperator> try_split(const CliffordAlgebra& a) {
    if (auto params = solve_split_params(a)) return build_split(a, *params);
    return std::nullopt;
}

std::optional<LinOperator> try_cyclic(const CliffordAlgebra& a) {
    if (a.n() != 3) return std::nullopt;
    if (auto params = solve_cyclic_params(a)) return build_cyclic(a, *params);
    return std::nullopt;
}

// Re-attempts `attempt` on every nontrivial coordinate relabeling of the
// form, transporting a hit back to `algebra`. Bounded to n <= 4, the only
// ranks where the direct solvers can miss while a relabeling succeeds.
template <class Try>
std::optional<LinOperator> try_permuted(const CliffordAlgebra& algebra, Try&& attempt) {
    std::size_t n = algebra.n();
    if (n > 4) return std::nullopt;
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{1});
    while (std::next_permutation(image.begin(), image.end())) {
        std::vector<Scalar> d;
        d.reserve(n);
        for (std::size_t t = 0; t < n; ++t) d.push_back(algebra.form().d(image[t] - 1));
        CliffordAlgebra permuted(algebra.field(), BilinearForm(std::move(d)));
        if (auto r = attempt(permuted)) return permute_basis(*r, algebra, image);
    }
    return std::nullopt;
}

// Witness with R^2 != 0 on a rank-3 form: cyclic family, then split, then
// both again on relabeled coordinates.
std::optional<LinOperator> cube_witness_rank3(const CliffordAlgebra& a) {
    if (auto r = try_cyclic(a)) return r;
    if (auto r = try_split(a)) return r;
    return try_permuted(a, [](const CliffordAlgebra& b) -> std::optional<LinOperator> {
        if (auto r = try_cyclic(b)) return r;
        return try_split(b);
    });
}

// Witness with R^2 != 0 for any rank >= 3: direct split, relabeled split,
// then a rank-3 witness on a coordinate triple extended by zero.
std::optional<LinOperator> cube_witness(const CliffordAlgebra& a) {
    std::size_t n = a.n();
    if (n == 3) return cube_witness_rank3(a);
    if (auto r = try_split(a)) return r;
    if (auto r = try_permuted(a, [](const CliffordAlgebra& b) { return try_split(b); })) return r;
    for (std::size_t i = 1; i + 2 <= n; ++i) {
        for (std::size_t j = i + 1; j + 1 <= n; ++j) {
            for (std::size_t k = j + 1; k <= n; ++k) {
                std::vector<Scalar> d = {a.form().d(i - 1), a.form().d(j - 1), a.form().d(k - 1)};
                CliffordAlgebra sub(a.field(), BilinearForm(std::move(d)));
                if (auto w = cube_witness_rank3(sub)) return extend_by_zero(*w, a, {i, j, k});
            }
        }
    }
    return std::nullopt;
}

// Nonzero witness with R^2 = 0: the binary family on a coordinate pair,
// extended by zero to the full algebra.
std::optional<LinOperator> square_witness(const CliffordAlgebra& a) {
    std::size_t n = a.n();
    if (n == 2) {
        if (auto params = solve_j3_params(a)) return build_j3(a, *params);
        return std::nullopt;
    }
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            std::vector<Scalar> d = {a.form().d(i - 1), a.form().d(j - 1)};
            CliffordAlgebra sub(a.field(), BilinearForm(std::move(d)));
            if (auto params = solve_j3_params(sub)) {
                return extend_by_zero(build_j3(sub, *params), a, {i, j});
            }
        }
    }
    return std::nullopt;
}

void flag_missing_witness(RbIndexVerdict& v, const char* reason) {
    if (!v.witness) v.note += reason;
}

RbIndexVerdict table_prime(const Field& field, const BilinearForm& form) {
    CliffordAlgebra algebra(field, form);
    std::size_t k = form.size() + 1;
    RbIndexVerdict v;
    if (k == 3) {
        v.value = 2;
        v.method = CertMethod::TheoremTable;
        v.witness = square_witness(algebra);
        v.note = "every weight-0 RB-operator on a rank-2 form satisfies R^2 = 0, and a nonzero "
                 "one exists over every prime field";
        if (!v.witness) {
            v.fully_certified = false;
            v.note += "; witness construction failed unexpectedly";
        }
        return v;
    }
    if (k == 4) {
        // Index 3 exactly when -d_1 d_2 d_3 is a nonzero square mod p;
        // equivalently, with r squares among the d_i: p = 1 mod 4 and r odd,
        // or p = 3 mod 4 and r even.
        Scalar prod = Scalar::zero(field) - form.d(0) * form.d(1) * form.d(2);
        if (legendre(prod) == 1) {
            v.value = 3;
            v.method = CertMethod::TheoremTable;
            v.witness = cube_witness_rank3(algebra);
            v.note = "-d_1 d_2 d_3 is a nonzero square mod p, so an operator with R^2 != 0 exists";
            if (!v.witness) {
                v.fully_certified = false;
                v.note += "; witness construction failed unexpectedly";
            }
        } else {
            v.value = 2;
            v.method = CertMethod::TheoremTable;
            v.witness = square_witness(algebra);
            v.note = "-d_1 d_2 d_3 is a non-square mod p, which rules out R^2 != 0; a nonzero "
                     "square-zero operator still exists";
            if (!v.witness) {
                v.fully_certified = false;
                v.note += "; witness construction failed unexpectedly";
            }
        }
        return v;
    }
    v.value = 3;
    v.method = CertMethod::Constructive;
    v.witness = cube_witness(algebra);
    v.note = "for rank >= 4 an operator with R^2 != 0 exists over every prime field";
    if (!v.witness) {
        v.fully_certified = false;
        v.note += "; witness construction failed unexpectedly";
    }
    return v;
}

RbIndexVerdict table_real(const BilinearForm& form) {
    std::size_t n = form.size();
    std::size_t pos = 0;
    for (const Scalar& s : form.coeffs()) {
        if (s.sign() > 0) ++pos;
    }
    std::size_t neg = n - pos;
    CliffordAlgebra twin = rational_twin(form);
    RbIndexVerdict v;
    v.method = CertMethod::TheoremTable;
    if (n == 2) {
        if (neg == 2) {
            v.value = 1;
            v.witness = LinOperator::zero(twin);
            v.note = "negative definite binary part: the zero operator is the only weight-0 "
                     "RB-operator";
        } else {
            v.value = 2;
            v.witness = square_witness(twin);
            v.note = "a nonzero square-zero operator exists whenever some entry is positive";
            if (v.witness) {
                v.note += "; the positive definite binary form is sometimes tabulated with "
                          "index 1, which the attached witness contradicts";
            } else {
                v.note += "; no witness with rational entries exists for this form (the real "
                          "parameters involve square roots)";
            }
        }
        return v;
    }
    if (neg == n) {
        v.value = 1;
        v.witness = LinOperator::zero(twin);
        v.note = "negative definite form: the zero operator is the only weight-0 RB-operator";
    } else if (pos == n || pos == 1) {
        v.value = 2;
        v.witness = square_witness(twin);
        v.note = "this signature forces R^2 = 0, and a nonzero square-zero operator exists";
        flag_missing_witness(v, "; no witness with rational entries was found (bounded search)");
    } else {
        v.value = 3;
        v.witness = cube_witness(twin);
        v.note = "a signature with at least two positive and one negative entries admits "
                 "R^2 != 0";
        flag_missing_witness(v, "; no witness with rational entries was found (bounded search)");
    }
    return v;
}

RbIndexVerdict table_closure(const BilinearForm& form) {
    CliffordAlgebra twin = rational_twin(form);
    RbIndexVerdict v;
    v.method = CertMethod::TheoremTable;
    if (form.size() == 2) {
        v.value = 2;
        v.witness = square_witness(twin);
        v.note = "over an algebraically closed field every weight-0 RB-operator on a rank-2 "
                 "form satisfies R^2 = 0, with nonzero instances";
    } else {
        v.value = 3;
        v.witness = cube_witness(twin);
        v.note = "over an algebraically closed field every form of rank >= 3 admits R^2 != 0 "
                 "(build_sqrt_split realizes it once square roots are available)";
    }
    flag_missing_witness(v, "; no witness with rational entries was found, the generic "
                            "construction needs square roots");
    return v;
}

} // namespace

SearchResult run_search(const CliffordAlgebra& algebra, const SearchConfig& cfg, SearchMode mode) {
    if (!algebra.field().is_prime_field()) {
        throw UnsupportedField(
            "complete enumeration needs a prime field; rational and symbolic coefficient "
            "fields have no finite candidate space");
    }
    RawCtx C = make_ctx(algebra);
    Accum total;
    if (mode == SearchMode::Naive) {
        naive_scan(C, cfg, total);
    } else {
        if (clamped_power(C.p, C.dim) > cfg.max_naive_space) {
            std::ostringstream out;
            out << "column candidate space p^dim = " << C.p << "^" << C.dim
                << " exceeds the budget of " << cfg.max_naive_space
                << "; partial (non-certifying) census: none";
            throw BudgetExceeded(out.str());
        }
        LevelLists L = build_lists(C, cfg);
        unsigned width = std::max(1u, cfg.parallel_width);
        if (width == 1) {
            pruned_scan_range(C, cfg, L, true, 0, L.cone.size(), total);
        } else {
            std::vector<std::future<Accum>> shards;
            shards.push_back(std::async(std::launch::async, [&C, &cfg, &L] {
                Accum acc;
                pruned_scan_range(C, cfg, L, true, 0, 0, acc);
                return acc;
            }));
            std::size_t chunk = (L.cone.size() + width - 1) / width;
            for (unsigned s = 0; s < width; ++s) {
                std::size_t begin = std::min(L.cone.size(), static_cast<std::size_t>(s) * chunk);
                std::size_t end = std::min(L.cone.size(), begin + chunk);
                shards.push_back(std::async(std::launch::async, [&C, &cfg, &L, begin, end] {
                    Accum acc;
                    pruned_scan_range(C, cfg, L, false, begin, end, acc);
                    return acc;
                }));
            }
            for (auto& shard : shards) merge(C, total, shard.get());
        }
    }
    SearchResult out;
    out.mode = mode;
    out.census = std::move(total.counts);
    out.nodes = total.nodes;
    if (total.have_best) out.witness = materialize(algebra, total.best);
    out.operators.reserve(total.collected.size());
    for (const RawOp& op : total.collected) out.operators.push_back(materialize(algebra, op));
    return out;
}

RbIndexVerdict rb_index_bruteforce(const CliffordAlgebra& algebra, const SearchConfig& cfg,
                                   SearchMode mode) {
    SearchResult sr = run_search(algebra, cfg, mode);
    RbIndexVerdict v;
    v.method = CertMethod::BruteForce;
    v.value = sr.census.empty() ? 1 : sr.census.rbegin()->first;
    v.witness = std::move(sr.witness);
    v.census = std::move(sr.census);
    std::ostringstream note;
    note << "complete enumeration in " << (mode == SearchMode::Naive ? "naive" : "pruned")
         << " mode over " << sr.nodes << " visited states";
    v.note = note.str();
    v.fully_certified = true;
    return v;
}

std::map<unsigned, std::uint64_t> census(const CliffordAlgebra& algebra, const SearchConfig& cfg,
                                         SearchMode mode) {
    return run_search(algebra, cfg, mode).census;
}

std::vector<LinOperator> search_operators(const CliffordAlgebra& algebra, const SearchConfig& cfg,
                                          SearchMode mode) {
    SearchConfig collecting = cfg;
    collecting.collect_operators = true;
    return run_search(algebra, collecting, mode).operators;
}

std::string census_csv(const Field& field, const BilinearForm& form,
                       const std::map<unsigned, std::uint64_t>& counts,
                       const std::string& certified) {
    if (!field.is_prime_field()) {
        throw UnsupportedField("census rows are defined over prime fields only");
    }
    std::ostringstream out;
    out << "p,form,index,count,certified\n";
    for (const auto& [idx, cnt] : counts) {
        out << field.p() << ",\"" << form.str() << "\"," << idx << ',' << cnt << ','
            << certified << "\n";
    }
    return out.str();
}

RbIndexVerdict rb_index_table(const Field& field, const BilinearForm& form) {
    for (const Scalar& s : form.coeffs()) {
        if (s.field() != field) throw MixedFields("form entries do not belong to the stated field");
    }
    if (form.size() < 2) {
        throw ConstraintViolated("the classification covers simple algebras only (rank >= 2)");
    }
    switch (field.kind()) {
    case FieldKind::PrimeField:
        return table_prime(field, form);
    case FieldKind::Rationals:
        throw UnsupportedField(
            "no closed form exists over Q: the index depends on fine arithmetic of the form; "
            "already on the rank-3 form (1,-3,1) it turns on whether x^2 - 3y^2 = -1 has an "
            "integer solution");
    case FieldKind::RealSymbolic:
        return table_real(form);
    case FieldKind::AlgClosedSymbolic:
        return table_closure(form);
    }
    throw Error("unhandled field kind");
}

} // namespace rbjordan
