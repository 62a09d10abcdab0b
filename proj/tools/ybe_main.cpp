// ybe: command-line front end for the Yang-Baxter engine.
//
// Exit codes: 0 pass, 1 check false, 2 input error, 3 nonempty ledger.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <variant>

#include "CLI11.hpp"
#include "ybe/bialgebra.hpp"
#include "ybe/claims.hpp"
#include "ybe/io.hpp"
#include "ybe/report.hpp"
#include "ybe/search.hpp"
#include "ybe/ybe.hpp"

namespace {

using namespace ybe;

constexpr int kPass = 0;
constexpr int kCheckFalse = 1;
constexpr int kInputError = 2;
constexpr int kLedgerNonempty = 3;

struct AlgebraArgs {
    std::string family;
    std::string alpha, beta, delta;
    std::size_t matrix = 0;
    std::string file;
    std::string field;
};

void add_algebra_options(CLI::App* cmd, AlgebraArgs& a) {
    cmd->add_option("--family", a.family, "Built-in family")
        ->check(CLI::IsMember({"ab", "bd", "dim2-abelian", "dim2-nonabelian"}));
    cmd->add_option("--alpha", a.alpha, "alpha parameter (element literal)");
    cmd->add_option("--beta", a.beta, "beta parameter (element literal)");
    cmd->add_option("--delta", a.delta, "delta parameter (element literal)");
    cmd->add_option("--matrix", a.matrix, "Matrix algebra M_N");
    cmd->add_option("--algebra-file", a.file, "Algebra definition file");
    cmd->add_option("--field", a.field, "Field literal, e.g. gf(2^2;0b111)");
}

struct LoadedAlgebra {
    Field field;
    std::optional<LieAlgebra> lie;
    std::optional<AssocAlgebra> assoc;
    FamilyParams params;

    std::size_t dim() const { return lie ? lie->dim() : assoc->dim(); }
};

Element element_or_zero(const Field& f, const std::string& text) {
    return text.empty() ? f.zero() : parse_element(f, text);
}

LoadedAlgebra load_algebra(const AlgebraArgs& a) {
    const int sources = int(!a.family.empty()) + int(a.matrix > 0) + int(!a.file.empty());
    if (sources != 1)
        throw Error(Errc::InvalidArgument, "give exactly one of --family, --matrix, --algebra-file");
    if (!a.file.empty()) {
        const AlgebraDefinition def = load_algebra_file(a.file);
        if (!a.field.empty() && !(parse_field(a.field) == def.field))
            throw Error(Errc::FieldMismatch, "--field differs from the field declared in " + a.file);
        LoadedAlgebra out{def.field, std::nullopt, std::nullopt, {}};
        if (def.kind == ProductKind::bracket)
            out.lie = to_lie(def, a.file);
        else
            out.assoc = to_assoc(def, a.file);
        return out;
    }
    if (a.field.empty()) throw Error(Errc::InvalidArgument, "--field is required");
    const Field f = parse_field(a.field);
    LoadedAlgebra out{f, std::nullopt, std::nullopt, {}};
    if (a.matrix > 0) {
        out.assoc = make_matrix_algebra(f, a.matrix);
        return out;
    }
    if (a.family == "ab") {
        out.params = {element_or_zero(f, a.alpha), element_or_zero(f, a.beta), std::nullopt};
        out.lie = make_family_ab(f, out.params);
    } else if (a.family == "bd") {
        out.params = {std::nullopt, element_or_zero(f, a.beta), element_or_zero(f, a.delta)};
        out.lie = make_family_bd(f, out.params);
    } else {
        out.lie = make_dim2(f, a.family == "dim2-abelian" ? Dim2Kind::abelian : Dim2Kind::nonabelian);
    }
    return out;
}

const LieAlgebra& need_lie(const LoadedAlgebra& a) {
    if (!a.lie) throw Error(Errc::InvalidArgument, "this check needs a Lie algebra");
    return *a.lie;
}

unsigned default_workers() {
    if (const char* env = std::getenv("YBE_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write " + out_path);
    out << text << '\n';
}

Json residual_support(const Tensor3& t) {
    Json terms = Json::array();
    const std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                if (t.code(i, j, l) != 0)
                    terms.push_back({{"index", {i + 1, j + 1, l + 1}}, {"value", t.at(i, j, l).literal()}});
    return terms;
}

int run_verify(const AlgebraArgs& a, const std::string& tensor, const std::string& check, const std::string& format,
               const std::string& out) {
    const LoadedAlgebra alg = load_algebra(a);
    const Tensor2 r = parse_tensor(alg.field, tensor, alg.dim());
    bool holds = false;
    Json j;
    j["check"] = check;
    j["field"] = alg.field.literal();
    j["algebra"] = alg.lie ? alg.lie->label() : alg.assoc->label();
    j["tensor"] = tensor_literal(r);
    if (check == "cybe") {
        const CybeResidual res = cybe_residual(need_lie(alg), r);
        holds = res.is_zero();
        j["residual"] = residual_support(res.value);
    } else if (check == "qybe") {
        if (!alg.assoc) throw Error(Errc::InvalidArgument, "qybe needs an associative algebra");
        const QybeSides sides = qybe_sides(*alg.assoc, r);
        holds = sides.holds();
        j["difference"] = residual_support(sides.lhs - sides.rhs);
    } else if (check == "strong") {
        holds = is_strongly_symmetric(r);
    } else if (check == "coboundary") {
        holds = is_coboundary(need_lie(alg), r);
    } else {
        holds = is_triangular(need_lie(alg), r);
    }
    j["holds"] = holds;
    if (format == "json")
        emit(j.dump(2), out);
    else if (format == "csv")
        emit("check,field,algebra,tensor,holds\n" + check + ',' + alg.field.literal() + ",\"" +
                 j["algebra"].get<std::string>() + "\",\"" + tensor_literal(r) + "\"," + (holds ? "true" : "false"),
             out);
    else
        emit(check + (holds ? ": holds" : ": fails"), out);
    return holds ? kPass : kCheckFalse;
}

int run_enumerate(const AlgebraArgs& a, const std::string& predicate, const std::string& classifier, unsigned workers,
                  std::uint64_t chunk, const std::string& format, const std::string& out, const std::string& dump) {
    const LoadedAlgebra alg = load_algebra(a);
    auto kind = [](const std::string& name) {
        const auto k = parse_predicate(name);
        if (!k) throw Error(Errc::InvalidArgument, "unknown selector '" + name + "'");
        return *k;
    };
    SweepSpec spec{.field = alg.field, .dim = alg.dim(), .lie = alg.lie, .assoc = alg.assoc};
    spec.predicate = kind(predicate);
    if (!classifier.empty()) spec.classifier = kind(classifier);
    spec.params = alg.params;
    spec.workers = workers;
    spec.chunk_size = chunk;
    spec.collect_all = !dump.empty();
    const SolutionReport report = sweep(spec);
    if (!dump.empty()) {
        std::ofstream d(dump);
        if (!d) throw Error(Errc::InvalidArgument, "cannot write " + dump);
        for (const Counterexample& c : report.all_differences)
            d << Json{{"tensor", tensor_literal(c.tensor)}, {"predicate", c.predicate}, {"classifier", c.classifier}}.dump()
              << '\n';
    }
    if (format == "json")
        emit(report_json(report).dump(2), out);
    else if (format == "csv")
        emit(csv_header() + '\n' + csv_row(report), out);
    else
        emit(report_text(report), out);
    return kPass;
}

int run_claim(const std::string& id, const std::string& fields, unsigned workers, const std::string& format,
              const std::string& out, const std::string& ledger_path) {
    std::vector<Field> list;
    for (const std::string& lit : split_field_list(fields.empty() ? "gf(2)" : fields)) list.push_back(parse_field(lit));
    ClaimOptions options;
    options.workers = workers;
    const ClaimResult result = claim_check(id, list, options);
    if (format == "json") {
        emit(claim_json(result).dump(2), out);
    } else if (format == "csv") {
        std::string text = csv_header();
        for (const ClaimComparison& c : result.comparisons) text += '\n' + csv_row(c.report);
        emit(text, out);
    } else {
        std::string text;
        for (const ClaimComparison& c : result.comparisons)
            text += report_text(c.report) + (c.holds ? "" : "  <- violated") + '\n';
        text += result.claim + (result.passed() ? ": pass" : ": ledger has " + std::to_string(result.ledger.size()) + " entries");
        emit(text, out);
    }
    if (!ledger_path.empty()) {
        std::ofstream l(ledger_path);
        if (!l) throw Error(Errc::InvalidArgument, "cannot write " + ledger_path);
        l << ledger_jsonl(result.ledger);
    }
    return result.passed() ? kPass : kLedgerNonempty;
}

int run_decompose(const std::string& field, const std::string& tensor, const std::string& format) {
    const Field f = parse_field(field);
    const Tensor2 r = parse_tensor(f, tensor);
    const RankOneDecomposition d = strong_rank1_decompose(r);
    Json j;
    std::string text;
    if (std::holds_alternative<ZeroTensor>(d)) {
        j["kind"] = "zero";
        text = "Zero";
    } else if (const auto* one = std::get_if<RankOne>(&d)) {
        j["kind"] = "rank-one";
        j["c"] = one->c.literal();
        Json v = Json::array();
        text = "c=" + one->c.literal() + ", v=(";
        for (std::size_t i = 0; i < one->v.size(); ++i) {
            v.push_back(one->v[i].literal());
            text += (i ? "," : "") + one->v[i].literal();
        }
        text += ")";
        j["v"] = std::move(v);
    } else {
        j["kind"] = "not-strongly-symmetric";
        text = "NotStronglySymmetric";
    }
    std::cout << (format == "json" ? j.dump(2) : text) << '\n';
    return kPass;
}

int run_bialgebra(const AlgebraArgs& a, const std::string& tensor, const std::string& check, const std::string& format) {
    const LoadedAlgebra alg = load_algebra(a);
    const LieAlgebra& lie = need_lie(alg);
    const Tensor2 r = parse_tensor(alg.field, tensor, alg.dim());
    const bool image = in_image_one_minus_tau(r);
    const CoJacobiDefect defect = cojacobi_defect(lie, r);
    const bool cybe = cybe_residual(lie, r).is_zero();
    const bool coboundary = image && defect.is_zero();
    const bool triangular = image && cybe;
    Json j;
    j["algebra"] = lie.label();
    j["field"] = alg.field.literal();
    j["tensor"] = tensor_literal(r);
    j["im_one_minus_tau"] = image;
    j["cojacobi_zero"] = defect.is_zero();
    j["cybe"] = cybe;
    j["coboundary"] = coboundary;
    j["triangular"] = triangular;
    Json per = Json::array();
    for (const Tensor3& t : defect.per_basis) per.push_back(residual_support(t));
    j["defect"] = std::move(per);
    if (format == "json") {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "im(1-tau)=" << image << " cojacobi-zero=" << defect.is_zero() << " cybe=" << cybe
                  << " coboundary=" << coboundary << " triangular=" << triangular << '\n';
    }
    return (check == "triangular" ? triangular : coboundary) ? kPass : kCheckFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Yang-Baxter equation solver over finite fields"};
    app.require_subcommand(1);

    AlgebraArgs alg;
    std::string tensor, check, format = "text", out, predicate = "cybe", classifier, dump, claim_id, fields, ledger;
    unsigned workers = default_workers();
    std::uint64_t chunk = std::uint64_t{1} << 16;
    bool list = false;
    const std::vector<std::string> formats{"json", "csv", "text"};

    CLI::App* verify = app.add_subcommand("verify", "Check one tensor");
    add_algebra_options(verify, alg);
    verify->add_option("--tensor", tensor, "Row-major tensor literal")->required();
    verify->add_option("--check", check, "Property to check")
        ->required()
        ->check(CLI::IsMember({"cybe", "qybe", "strong", "coboundary", "triangular"}));
    verify->add_option("--format", format)->check(CLI::IsMember(formats));
    verify->add_option("--out", out, "Write the report here");

    CLI::App* enumerate = app.add_subcommand("enumerate", "Sweep every tensor over the field");
    add_algebra_options(enumerate, alg);
    enumerate->add_option("--predicate", predicate, "Selector counted over the sweep");
    enumerate->add_option("--classifier", classifier, "Selector compared against the predicate");
    enumerate->add_option("--workers", workers, "Worker threads (default YBE_WORKERS)");
    enumerate->add_option("--chunk", chunk, "Tensors per work unit");
    enumerate->add_option("--format", format)->check(CLI::IsMember(formats));
    enumerate->add_option("--out", out, "Write the report here");
    enumerate->add_option("--dump", dump, "Write every difference as JSON lines");

    CLI::App* claim = app.add_subcommand("claim", "Run a registered claim suite");
    claim->add_option("id", claim_id, "Claim id");
    claim->add_flag("--list", list, "List claim ids");
    claim->add_option("--fields", fields, "Comma-separated field literals (default gf(2))");
    claim->add_option("--workers", workers, "Worker threads (default YBE_WORKERS)");
    claim->add_option("--format", format)->check(CLI::IsMember(formats));
    claim->add_option("--out", out, "Write the report here");
    claim->add_option("--ledger", ledger, "Write the ledger as JSON lines");

    CLI::App* decompose = app.add_subcommand("decompose", "Rank-one normal form of a strongly symmetric tensor");
    std::string dfield;
    decompose->add_option("--field", dfield)->required();
    decompose->add_option("--tensor", tensor)->required();
    decompose->add_option("--format", format)->check(CLI::IsMember(formats));

    CLI::App* bialgebra = app.add_subcommand("bialgebra", "Coboundary and triangular checks");
    add_algebra_options(bialgebra, alg);
    std::string bcheck = "coboundary";
    bialgebra->add_option("--tensor", tensor)->required();
    bialgebra->add_option("--check", bcheck)->check(CLI::IsMember({"coboundary", "triangular"}));
    bialgebra->add_option("--format", format)->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInputError;
    }

    try {
        if (*verify) return run_verify(alg, tensor, check, format, out);
        if (*enumerate) return run_enumerate(alg, predicate, classifier, workers, chunk, format, out, dump);
        if (*claim) {
            if (list) {
                for (auto id : claim_ids()) std::cout << id << '\n';
                return kPass;
            }
            if (claim_id.empty()) throw Error(Errc::InvalidArgument, "claim id required");
            return run_claim(claim_id, fields, workers, format, out, ledger);
        }
        if (*decompose) return run_decompose(dfield, tensor, format);
        if (*bialgebra) return run_bialgebra(alg, tensor, bcheck, format);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
