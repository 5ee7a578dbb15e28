// Command-line front end for the rbjordan library: verifies operator files,
// builds family members, certifies nilpotency indices, runs exhaustive
// censuses, and solves diagonal-form equations.
//
// Exit codes: 0 success (including a decided "absent"), 1 domain failure
// (identity fails, unsupported field, budget exceeded, undecided search),
// 2 usage or parse failure. JSON output mirrors the text output
// field-for-field. Every command is deterministic for fixed inputs.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbjordan/constructions.hpp"
#include "rbjordan/errors.hpp"
#include "rbjordan/jordan.hpp"
#include "rbjordan/operator_io.hpp"
#include "rbjordan/quadform.hpp"
#include "rbjordan/rbindex.hpp"
#include "rbjordan/rbop.hpp"
#include "rbjordan/scalar.hpp"

namespace {

using nlohmann::json;
using namespace rbjordan;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

const char* flag_str(Flag f) {
    switch (f) {
        case Flag::Pass: return "pass";
        case Flag::Fail: return "fail";
        case Flag::NotApplicable: return "n/a";
    }
    return "?";
}

const char* method_str(CertMethod m) {
    switch (m) {
        case CertMethod::TheoremTable: return "table";
        case CertMethod::BruteForce: return "brute";
        case CertMethod::Constructive: return "constructive";
    }
    return "?";
}

SearchMode parse_mode(const std::string& text) {
    return text == "naive" ? SearchMode::Naive : SearchMode::Pruned;
}

json matrix_json(const LinOperator& R) {
    json rows = json::array();
    for (std::size_t r = 0; r < R.M.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < R.M.cols(); ++c) row.push_back(R.M.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

json census_json(const std::map<unsigned, std::uint64_t>& counts) {
    json obj = json::object();
    for (const auto& [index, count] : counts) obj[std::to_string(index)] = count;
    return obj;
}

void print_census_text(const std::map<unsigned, std::uint64_t>& counts) {
    std::cout << "census:\n";
    for (const auto& [index, count] : counts)
        std::cout << "  index " << index << ": " << count << "\n";
}

std::string point_str(const std::vector<Scalar>& point) {
    std::string out = "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i != 0) out += ",";
        out += point[i].str();
    }
    return out + ")";
}

json point_json(const std::vector<Scalar>& point) {
    json arr = json::array();
    for (const Scalar& coord : point) arr.push_back(coord.str());
    return arr;
}

std::vector<Scalar> parse_scalar_list(const Field& f, const std::string& text,
                                      const std::string& what) {
    std::vector<Scalar> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) out.push_back(Scalar::parse(f, item));
    if (out.empty()) throw ParseError(what + " must be a comma-separated scalar list");
    return out;
}

/// Search budget for index/search/census, overridable via RB_SEARCH_BUDGET.
SearchConfig config_from_env() {
    SearchConfig cfg;
    if (const char* raw = std::getenv("RB_SEARCH_BUDGET")) {
        const std::string text(raw);
        std::size_t consumed = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(text, &consumed);
        } catch (const std::exception&) {
            consumed = 0;
        }
        if (consumed != text.size() || value == 0)
            throw ParseError("RB_SEARCH_BUDGET must be a positive integer, got '" + text + "'");
        cfg.max_naive_space = value;
    }
    return cfg;
}

// --- verify ------------------------------------------------------------------

struct VerifyOpts {
    std::string file;
    std::string weight = "0";
    bool json_out = false;
};

int run_verify(const VerifyOpts& opt) {
    LinOperator R = [&] {
        if (opt.file == "-") return read_operator(std::cin);
        std::ifstream in(opt.file);
        if (!in) throw ParseError("cannot open operator file '" + opt.file + "'");
        return read_operator(in);
    }();
    const CliffordAlgebra& algebra = R.algebra;
    const Scalar weight = Scalar::parse(algebra.field(), opt.weight);
    const RBReport report = check_rb(R, weight);

    const StructureFlags& fl = report.structure;
    const std::pair<const char*, Flag> flags[] = {
        {"unit_avoids_image", fl.unit_avoids_image},
        {"kernel_at_least_two", fl.kernel_at_least_two},
        {"scalar_r1_collapses", fl.scalar_r1_collapses},
        {"r1_square_identity", fl.r1_square_identity},
        {"r1_isotropic", fl.r1_isotropic},
        {"r1_absorbs_columns", fl.r1_absorbs_columns},
        {"second_iterate_collapses", fl.second_iterate_collapses},
        {"column_pair_relations", fl.column_pair_relations},
        {"column_self_relations", fl.column_self_relations},
        {"rescaled_skew", fl.rescaled_skew},
    };
    const char* verdict = report.is_rb ? "rb-operator" : "not an rb-operator";

    if (opt.json_out) {
        json out;
        out["field"] = algebra.field().descriptor();
        out["form"] = algebra.form().str();
        out["weight"] = weight.str();
        out["verdict"] = verdict;
        out["is_rb"] = report.is_rb;
        out["nilpotency_index"] = report.nilpotency ? json(*report.nilpotency) : json(nullptr);
        json pairs = json::array();
        for (const FailingPair& fp : report.failing_pairs)
            pairs.push_back(
                {{"i", fp.i}, {"j", fp.j}, {"residual", algebra.element_str(fp.residual)}});
        out["failing_pairs"] = pairs;
        json flag_obj = json::object();
        for (const auto& [name, value] : flags) flag_obj[name] = flag_str(value);
        out["structure_flags"] = flag_obj;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "field: " << algebra.field().descriptor() << "\n";
        std::cout << "form: " << algebra.form().str() << "\n";
        std::cout << "weight: " << weight.str() << "\n";
        std::cout << "verdict: " << verdict << "\n";
        if (report.nilpotency)
            std::cout << "nilpotency index: " << *report.nilpotency << "\n";
        else
            std::cout << "nilpotency index: none (not nilpotent)\n";
        if (report.failing_pairs.empty()) {
            std::cout << "failing pairs: none\n";
        } else {
            std::cout << "failing pairs: " << report.failing_pairs.size() << "\n";
            for (const FailingPair& fp : report.failing_pairs)
                std::cout << "  (" << fp.i << ", " << fp.j
                          << "): residual = " << algebra.element_str(fp.residual) << "\n";
        }
        std::cout << "structure flags:\n";
        for (const auto& [name, value] : flags)
            std::cout << "  " << name << ": " << flag_str(value) << "\n";
    }
    return report.is_rb ? kExitOk : kExitDomain;
}

// --- construct ---------------------------------------------------------------

struct ConstructOpts {
    std::string family;
    std::string field;
    std::string form;
    bool auto_params = false;
    std::string abc;
    std::string kl;
    int head = -1;
    std::string l_list;
    std::string k_list;
    std::string x0;
    bool json_out = false;
};

int run_construct(const ConstructOpts& opt) {
    const Field field = Field::parse(opt.field);
    const CliffordAlgebra algebra(field, BilinearForm::parse(field, opt.form));

    const bool has_abc = !opt.abc.empty();
    const bool has_kl = !opt.kl.empty();
    const bool has_head = opt.head >= 0;
    const bool has_l = !opt.l_list.empty();
    const bool has_k = !opt.k_list.empty();
    const bool has_x0 = !opt.x0.empty();
    auto solver_failed = [&](const char* family) -> Error {
        return Error("no parameters found for family " + std::string(family) + " on " +
                     field.descriptor() + " with form " + algebra.form().str() +
                     " (over Q this can mean undecided rather than absent)");
    };

    std::optional<LinOperator> built;
    json params = json::object();
    std::string params_comment;

    if (opt.family == "j3") {
        if (has_head || has_l || has_k || has_x0)
            throw ParseError("family j3 accepts only --abc/--kl or --auto");
        std::optional<J3FamilyParams> p;
        if (opt.auto_params) {
            if (has_abc || has_kl)
                throw ParseError("give either --auto or explicit --abc/--kl, not both");
            p = solve_j3_params(algebra);
            if (!p) throw solver_failed("j3");
        } else {
            if (!has_abc || !has_kl)
                throw ParseError("family j3 needs --abc a,b,c and --kl k,l, or --auto");
            const auto abc = parse_scalar_list(field, opt.abc, "--abc");
            const auto kl = parse_scalar_list(field, opt.kl, "--kl");
            if (abc.size() != 3 || kl.size() != 2)
                throw ParseError("--abc takes three entries and --kl takes two");
            p = J3FamilyParams{abc[0], abc[1], abc[2], kl[0], kl[1]};
        }
        built = build_j3(algebra, *p);
        params = {{"a", p->a.str()}, {"b", p->b.str()}, {"c", p->c.str()},
                  {"k", p->k.str()}, {"l", p->l.str()}};
        params_comment = "a,b,c = " + p->a.str() + "," + p->b.str() + "," + p->c.str() +
                         "; k,l = " + p->k.str() + "," + p->l.str();
    } else if (opt.family == "split") {
        if (has_abc || has_kl || has_x0)
            throw ParseError("family split accepts only --head/--l/--k or --auto");
        std::optional<SplitParams> p;
        if (opt.auto_params) {
            if (has_head || has_l || has_k)
                throw ParseError("give either --auto or explicit --head/--l/--k, not both");
            p = solve_split_params(algebra);
            if (!p) throw solver_failed("split");
        } else {
            if (!has_head || !has_l || !has_k)
                throw ParseError("family split needs --head, --l and --k, or --auto");
            p = SplitParams{static_cast<std::size_t>(opt.head),
                            parse_scalar_list(field, opt.l_list, "--l"),
                            parse_scalar_list(field, opt.k_list, "--k")};
        }
        built = build_split(algebra, *p);
        json l_arr = json::array();
        json k_arr = json::array();
        std::string l_text;
        std::string k_text;
        for (const Scalar& s : p->l) {
            l_arr.push_back(s.str());
            l_text += (l_text.empty() ? "" : ",") + s.str();
        }
        for (const Scalar& s : p->k) {
            k_arr.push_back(s.str());
            k_text += (k_text.empty() ? "" : ",") + s.str();
        }
        params = {{"head", p->split}, {"l", l_arr}, {"k", k_arr}};
        params_comment =
            "head = " + std::to_string(p->split) + "; l = " + l_text + "; k = " + k_text;
    } else if (opt.family == "cyclic") {
        if (has_abc || has_kl || has_head || has_l)
            throw ParseError("family cyclic accepts only --k/--x0 or --auto");
        std::optional<CyclicParams> p;
        if (opt.auto_params) {
            if (has_k || has_x0)
                throw ParseError("give either --auto or explicit --k/--x0, not both");
            p = solve_cyclic_params(algebra);
            if (!p) throw solver_failed("cyclic");
        } else {
            if (!has_k || !has_x0)
                throw ParseError("family cyclic needs --k k1,k2,k3 and --x0, or --auto");
            const auto k = parse_scalar_list(field, opt.k_list, "--k");
            if (k.size() != 3) throw ParseError("--k takes exactly three entries for cyclic");
            p = CyclicParams{k[0], k[1], k[2], Scalar::parse(field, opt.x0)};
        }
        built = build_cyclic(algebra, *p);
        params = {{"k", json::array({p->k1.str(), p->k2.str(), p->k3.str()})},
                  {"x0", p->x0.str()}};
        params_comment = "k = " + p->k1.str() + "," + p->k2.str() + "," + p->k3.str() +
                         "; x0 = " + p->x0.str();
    } else { // sqrt-split
        if (opt.auto_params || has_abc || has_kl || has_head || has_l || has_k || has_x0)
            throw ParseError("family sqrt-split takes no parameters");
        built = build_sqrt_split(algebra);
    }

    if (opt.json_out) {
        json out;
        out["family"] = opt.family;
        out["field"] = field.descriptor();
        out["form"] = algebra.form().str();
        out["parameters"] = params;
        out["matrix"] = matrix_json(*built);
        std::cout << out.dump(2) << "\n";
    } else {
        if (!params_comment.empty())
            std::cout << "# " << opt.family << " parameters: " << params_comment << "\n";
        std::cout << write_operator(*built);
    }
    return kExitOk;
}

// --- index -------------------------------------------------------------------

struct IndexOpts {
    std::string field;
    std::string form;
    std::string certify = "table";
    std::string mode = "pruned";
    unsigned width = 1;
    std::string witness_path;
    bool json_out = false;
};

json verdict_json(const RbIndexVerdict& v) {
    json out;
    out["value"] = v.value;
    out["method"] = method_str(v.method);
    out["fully_certified"] = v.fully_certified;
    out["note"] = v.note;
    out["census"] = v.census.empty() ? json(nullptr) : census_json(v.census);
    out["witness"] = v.witness ? matrix_json(*v.witness) : json(nullptr);
    return out;
}

/// Writes the witness to `path` when both exist; returns the path written.
std::optional<std::string> emit_witness_file(const std::optional<LinOperator>& witness,
                                             const std::string& path) {
    if (!witness || path.empty()) return std::nullopt;
    std::ofstream out(path);
    if (!out) throw Error("cannot write witness file '" + path + "'");
    out << write_operator(*witness);
    return path;
}

void print_witness_text(const std::optional<LinOperator>& witness,
                        const std::optional<std::string>& file) {
    if (file)
        std::cout << "witness: written to " << *file << "\n";
    else if (witness)
        std::cout << "witness:\n" << write_operator(*witness);
    else
        std::cout << "witness: none\n";
}

int run_index(const IndexOpts& opt) {
    const Field field = Field::parse(opt.field);
    const BilinearForm form = BilinearForm::parse(field, opt.form);

    std::optional<RbIndexVerdict> table;
    std::optional<RbIndexVerdict> brute;
    if (opt.certify == "table" || opt.certify == "both") table = rb_index_table(field, form);
    if (opt.certify == "brute" || opt.certify == "both") {
        SearchConfig cfg = config_from_env();
        cfg.parallel_width = opt.width;
        brute = rb_index_bruteforce(CliffordAlgebra(field, form), cfg, parse_mode(opt.mode));
    }

    const bool mismatch = table && brute && table->value != brute->value;
    // In `both` mode the brute verdict carries the richer record (census and
    // lex-least witness), so it drives the merged output.
    const RbIndexVerdict& primary = brute ? *brute : *table;
    const std::optional<std::string> witness_file =
        mismatch ? std::nullopt : emit_witness_file(primary.witness, opt.witness_path);

    if (opt.json_out) {
        json out;
        out["field"] = field.descriptor();
        out["form"] = form.str();
        out["certify"] = opt.certify;
        if (table && brute) {
            out["table"] = verdict_json(*table);
            out["brute"] = verdict_json(*brute);
            out["agreement"] = !mismatch;
        }
        if (!mismatch) {
            out["value"] = primary.value;
            out["method"] = table && brute ? "table+brute" : method_str(primary.method);
            out["fully_certified"] = primary.fully_certified;
            out["note"] = primary.note;
            out["census"] = primary.census.empty() ? json(nullptr) : census_json(primary.census);
            out["witness"] = primary.witness ? matrix_json(*primary.witness) : json(nullptr);
            out["witness_file"] = witness_file ? json(*witness_file) : json(nullptr);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "field: " << field.descriptor() << "\n";
        std::cout << "form: " << form.str() << "\n";
        if (table && brute) {
            std::cout << "table value: " << table->value << "\n";
            std::cout << "brute value: " << brute->value << "\n";
            std::cout << "agreement: " << (mismatch ? "MISMATCH" : "yes") << "\n";
        }
        if (!mismatch) {
            std::cout << "value: " << primary.value << "\n";
            std::cout << "method: "
                      << (table && brute ? "table+brute" : method_str(primary.method)) << "\n";
            std::cout << "certified: " << (primary.fully_certified ? "fully" : "partially")
                      << "\n";
            if (table && brute) {
                if (!table->note.empty()) std::cout << "note (table): " << table->note << "\n";
                if (!brute->note.empty()) std::cout << "note (brute): " << brute->note << "\n";
            } else if (!primary.note.empty()) {
                std::cout << "note: " << primary.note << "\n";
            }
            if (!primary.census.empty()) print_census_text(primary.census);
            print_witness_text(primary.witness, witness_file);
        }
    }
    return mismatch ? kExitDomain : kExitOk;
}

// --- search ------------------------------------------------------------------

struct SearchOpts {
    std::string field;
    std::string form;
    std::string mode = "pruned";
    unsigned width = 1;
    unsigned ops = 0;
    bool json_out = false;
};

int run_search_cmd(const SearchOpts& opt) {
    const Field field = Field::parse(opt.field);
    const CliffordAlgebra algebra(field, BilinearForm::parse(field, opt.form));
    SearchConfig cfg = config_from_env();
    cfg.parallel_width = opt.width;
    cfg.collect_operators = opt.ops > 0;
    const SearchResult result = run_search(algebra, cfg, parse_mode(opt.mode));

    const unsigned max_index = result.census.empty() ? 0 : result.census.rbegin()->first;
    std::uint64_t total = 0;
    for (const auto& [index, count] : result.census) total += count;
    const std::size_t shown = std::min<std::size_t>(opt.ops, result.operators.size());

    if (opt.json_out) {
        json out;
        out["field"] = field.descriptor();
        out["form"] = algebra.form().str();
        out["mode"] = opt.mode;
        out["nodes"] = result.nodes;
        out["total_operators"] = total;
        out["census"] = census_json(result.census);
        out["max_index"] = max_index;
        out["witness"] = result.witness ? matrix_json(*result.witness) : json(nullptr);
        if (opt.ops > 0) {
            json arr = json::array();
            for (std::size_t i = 0; i < shown; ++i) arr.push_back(matrix_json(result.operators[i]));
            out["operators"] = arr;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "field: " << field.descriptor() << "\n";
        std::cout << "form: " << algebra.form().str() << "\n";
        std::cout << "mode: " << opt.mode << "\n";
        std::cout << "nodes: " << result.nodes << "\n";
        std::cout << "total operators: " << total << "\n";
        print_census_text(result.census);
        std::cout << "max index: " << max_index << "\n";
        print_witness_text(result.witness, std::nullopt);
        if (opt.ops > 0) {
            std::cout << "operators: showing " << shown << " of " << result.operators.size()
                      << "\n";
            for (std::size_t i = 0; i < shown; ++i) {
                if (i != 0) std::cout << "\n";
                std::cout << write_operator(result.operators[i]);
            }
        }
    }
    return kExitOk;
}

// --- census ------------------------------------------------------------------

struct CensusOpts {
    std::string field;
    std::string form;
    std::string mode = "pruned";
    unsigned width = 1;
    bool json_out = false;
};

int run_census(const CensusOpts& opt) {
    const Field field = Field::parse(opt.field);
    const BilinearForm form = BilinearForm::parse(field, opt.form);
    const CliffordAlgebra algebra(field, form);
    SearchConfig cfg = config_from_env();
    cfg.parallel_width = opt.width;
    const auto counts = census(algebra, cfg, parse_mode(opt.mode));

    if (opt.json_out) {
        json out;
        out["p"] = field.p();
        out["form"] = form.str();
        out["census"] = census_json(counts);
        out["certified"] = opt.mode;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << census_csv(field, form, counts, opt.mode);
    }
    return kExitOk;
}

// --- solve-form --------------------------------------------------------------

struct SolveOpts {
    std::string kind;
    std::string field;
    std::string coeffs;
    bool json_out = false;
};

int run_solve(const SolveOpts& opt) {
    const Field field = Field::parse(opt.field);
    const DiagonalForm form = DiagonalForm::parse(field, opt.coeffs);

    const SolveResult result = [&] {
        if (opt.kind == "isotropic") return isotropic_vector(form);
        if (opt.kind == "unit") return unit_representation(form);
        if (form.size() != 3)
            throw ParseError("solve-form represent takes exactly three coefficients a,b,c");
        auto [x, y] = represent(form.d(0), form.d(1), form.d(2));
        return SolveResult::make_found({x, y});
    }();
    const char* status = result.status == SolveStatus::Found    ? "found"
                         : result.status == SolveStatus::Absent ? "absent"
                                                                : "undecided";

    if (opt.json_out) {
        json out;
        out["kind"] = opt.kind;
        out["field"] = field.descriptor();
        out["form"] = form.str();
        out["status"] = status;
        out["point"] = result.found() ? point_json(result.point) : json(nullptr);
        out["note"] = result.note;
        std::cout << out.dump(2) << "\n";
    } else {
        if (result.found())
            std::cout << point_str(result.point) << "\n";
        else
            std::cout << status << "\n";
        if (!result.note.empty()) std::cout << "note: " << result.note << "\n";
    }
    return result.status == SolveStatus::Undecided ? kExitDomain : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for weight-0 Rota-Baxter operators on Clifford-type Jordan "
                 "algebras J_{n+1}(f)"};
    app.require_subcommand(1);

    VerifyOpts vo;
    CLI::App* verify = app.add_subcommand("verify", "Check an operator file against the "
                                                    "Rota-Baxter identity");
    verify->add_option("file", vo.file, "operator file path, or - for stdin")->required();
    verify->add_option("--weight", vo.weight, "identity weight (default 0)");
    verify->add_flag("--json", vo.json_out, "machine-readable output");

    ConstructOpts co;
    CLI::App* construct =
        app.add_subcommand("construct", "Build a family member and emit its operator file");
    construct->add_option("family", co.family, "operator family")
        ->required()
        ->check(CLI::IsMember({"j3", "split", "cyclic", "sqrt-split"}));
    construct->add_option("field", co.field, "field descriptor: Zp:<p> | Q | R | Cbar")
        ->required();
    construct->add_option("form", co.form, "comma-separated nonzero diagonal entries")
        ->required();
    construct->add_flag("--auto", co.auto_params, "solve for parameters deterministically");
    construct->add_option("--abc", co.abc, "j3: isotropic vector a,b,c");
    construct->add_option("--kl", co.kl, "j3: column weights k,l");
    construct->add_option("--head", co.head, "split: head length p");
    construct->add_option("--l", co.l_list, "split: head weights l_1..l_p");
    construct->add_option("--k", co.k_list, "split: tail weights / cyclic: isotropic triple");
    construct->add_option("--x0", co.x0, "cyclic: root of x^2 = -d_1 d_2 d_3");
    construct->add_flag("--json", co.json_out, "machine-readable output");

    IndexOpts ix;
    CLI::App* index = app.add_subcommand("index", "Certify the nilpotency index rb(J) of the "
                                                  "algebra");
    index->add_option("field", ix.field, "field descriptor: Zp:<p> | Q | R | Cbar")->required();
    index->add_option("form", ix.form, "comma-separated nonzero diagonal entries")->required();
    index->add_option("--certify", ix.certify, "certification route (default table)")
        ->check(CLI::IsMember({"table", "brute", "both"}));
    index->add_option("--mode", ix.mode, "search engine for brute (default pruned)")
        ->check(CLI::IsMember({"naive", "pruned"}));
    index->add_option("--width", ix.width, "parallel search shards")->check(CLI::PositiveNumber);
    index->add_option("--witness", ix.witness_path, "write the witness operator file here");
    index->add_flag("--json", ix.json_out, "machine-readable output");

    SearchOpts so;
    CLI::App* search =
        app.add_subcommand("search", "Enumerate every weight-0 RB-operator on the algebra");
    search->add_option("field", so.field, "prime-field descriptor Zp:<p>")->required();
    search->add_option("form", so.form, "comma-separated nonzero diagonal entries")->required();
    search->add_option("--mode", so.mode, "naive | pruned (default pruned)")
        ->check(CLI::IsMember({"naive", "pruned"}));
    search->add_option("--width", so.width, "parallel search shards")->check(CLI::PositiveNumber);
    search->add_option("--ops", so.ops, "print up to N found operator files");
    search->add_flag("--json", so.json_out, "machine-readable output");

    CensusOpts cn;
    CLI::App* census_cmd =
        app.add_subcommand("census", "Print the nilpotency-index census as CSV");
    census_cmd->add_option("field", cn.field, "prime-field descriptor Zp:<p>")->required();
    census_cmd->add_option("form", cn.form, "comma-separated nonzero diagonal entries")
        ->required();
    census_cmd->add_option("--mode", cn.mode, "naive | pruned (default pruned)")
        ->check(CLI::IsMember({"naive", "pruned"}));
    census_cmd->add_option("--width", cn.width, "parallel search shards")
        ->check(CLI::PositiveNumber);
    census_cmd->add_flag("--json", cn.json_out, "machine-readable output");

    SolveOpts fo;
    CLI::App* solve = app.add_subcommand("solve-form", "Solve a diagonal quadratic-form "
                                                       "equation");
    solve->add_option("kind", fo.kind, "isotropic | represent | unit")
        ->required()
        ->check(CLI::IsMember({"isotropic", "represent", "unit"}));
    solve->add_option("field", fo.field, "field descriptor: Zp:<p> | Q")->required();
    solve->add_option("coefficients", fo.coeffs, "comma-separated nonzero coefficients")
        ->required();
    solve->add_flag("--json", fo.json_out, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(vo);
        if (construct->parsed()) return run_construct(co);
        if (index->parsed()) return run_index(ix);
        if (search->parsed()) return run_search_cmd(so);
        if (census_cmd->parsed()) return run_census(cn);
        if (solve->parsed()) return run_solve(fo);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
