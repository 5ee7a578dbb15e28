#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "rbjordan/rbop.hpp"

namespace rbjordan {

/// How an index claim is backed.
enum class CertMethod {
    TheoremTable, // closed-form case analysis on the field and form shape
    BruteForce,   // complete enumeration of all weight-0 RB-operators
    Constructive, // explicit witness for the lower bound; the universal
                  // cube-zero property supplies the upper bound
};

enum class SearchMode { Naive, Pruned };

/// Budget and rule toggles for the operator searches. Every pruning rule is
/// a proven necessary condition on weight-0 RB-operators, so disabling one
/// only slows the search down; the toggles exist so equivalence tests can
/// demonstrate exactly that.
struct SearchConfig {
    /// Caps the naive candidate space and, in pruned mode, the number of
    /// visited partial assignments (per independent partition).
    std::uint64_t max_naive_space = 100'000'000;
    bool cut_isotropic_r1 = true;     // R(1) = 0 or zero-scalar isotropic
    bool cut_column_structure = true; // per column: norm 0, e_i-slot 0, R(1)-pairing
    bool cut_pair_relations = true;   // cross-column coupling equations
    unsigned parallel_width = 1;      // independent R(1)-partitions, merged in order
    bool collect_operators = false;   // keep every found operator (small searches)
};

/// Complete outcome of one enumeration run.
struct SearchResult {
    std::map<unsigned, std::uint64_t> census; // nilpotency index -> count
    std::optional<LinOperator> witness;       // lex-least operator of max index
    std::vector<LinOperator> operators;       // filled when collect_operators
    std::uint64_t nodes = 0;                  // candidates / assignments visited
    SearchMode mode = SearchMode::Pruned;
};

struct RbIndexVerdict {
    unsigned value = 1; // max nilpotency index over all weight-0 RB-operators
    CertMethod method = CertMethod::TheoremTable;
    std::optional<LinOperator> witness;       // operator attaining `value`
    std::map<unsigned, std::uint64_t> census; // populated by BruteForce
    std::string note;
    bool fully_certified = true;
};

/// The closed-form nilpotency index of J_{n+1}(f), k = n + 1 >= 3.
///
/// Prime fields: k = 3 -> 2; k = 4 -> parity rule on the number of square
/// entries among d_1, d_2, d_3, split by p mod 4 (p = 1 mod 4: odd count
/// -> 3; p = 3 mod 4: even count -> 3; otherwise 2); k >= 5 -> 3, certified
/// constructively by an explicit witness. Real-symbolic forms (entries read
/// by sign): all negative -> 1; all positive or exactly one positive -> 2;
/// otherwise 3 (k = 3 instead follows the binary-family analysis, see the
/// note it emits). Algebraically closed: 2 for k = 3, else 3.
///
/// Witnesses are attached whenever they are constructible with rational
/// arithmetic; over Z_p every verdict carries one.
/// Throws UnsupportedField for Q, where no closed form holds (on
/// J_4((1,-3,1)) the answer turns on the Pell equation x^2 - 3y^2 = -1).
RbIndexVerdict rb_index_table(const Field& field, const BilinearForm& form);

/// Enumerates ALL weight-0 RB-operators on the algebra (prime fields only)
/// and reports the complete census. Naive mode walks every matrix and is the
/// independent oracle; pruned mode explores column-by-column, R(1) first,
/// rejecting partial assignments only via proven necessary conditions plus
/// those instances of the defining identity that the assigned columns
/// already determine, so its census is a complete-enumeration certificate.
/// Throws BudgetExceeded (message carries the non-certifying partial counts)
/// and UnsupportedField off prime fields.
SearchResult run_search(const CliffordAlgebra& algebra, const SearchConfig& cfg = {},
                        SearchMode mode = SearchMode::Pruned);

/// run_search wrapped as a verdict: value = max census index, witness the
/// lex-least operator attaining it, method BruteForce.
RbIndexVerdict rb_index_bruteforce(const CliffordAlgebra& algebra, const SearchConfig& cfg = {},
                                   SearchMode mode = SearchMode::Pruned);

/// The census table alone: nilpotency index -> number of operators.
std::map<unsigned, std::uint64_t> census(const CliffordAlgebra& algebra,
                                         const SearchConfig& cfg = {},
                                         SearchMode mode = SearchMode::Pruned);

/// Every weight-0 RB-operator, in deterministic search order.
std::vector<LinOperator> search_operators(const CliffordAlgebra& algebra,
                                          const SearchConfig& cfg = {},
                                          SearchMode mode = SearchMode::Pruned);

/// Census rows as CSV: header "p,form,index,count,certified"; the form is
/// quoted since it contains commas. `certified` is the caller's label
/// (naive, pruned or constructive).
std::string census_csv(const Field& field, const BilinearForm& form,
                       const std::map<unsigned, std::uint64_t>& counts,
                       const std::string& certified);

} // namespace rbjordan
