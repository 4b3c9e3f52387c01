#include "momentlab/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "momentlab/catalog.hpp"
#include "momentlab/identities.hpp"
#include "momentlab/serialize.hpp"

namespace momentlab {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Io {
    std::istream& in;
    std::ostream& out;
    bool float_output = false;
};

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size() || v < 0) throw UsageError("bad index '" + item + "'");
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error&) {
            throw UsageError("bad index '" + item + "'");
        }
    }
    return out;
}

SequenceDocument read_document(std::istream& in) {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return SequenceDocument::parse(text);
}

void floatify(Json& arr) {
    for (auto& v : arr) v = Rational::parse(v.get<std::string>()).to_double();
}

void write_document(const Io& io, const SequenceDocument& doc) {
    if (!io.float_output || doc.symbolic) {
        io.out << doc.print();
        return;
    }
    Json j = doc.to_json();
    for (const char* key : {"values", "a", "lambda"}) {
        if (j.contains(key)) floatify(j[key]);
    }
    io.out << j.dump() << "\n";
}

ValuationScheme::Kind parse_scheme(const std::string& name) {
    if (name == "motzkin") return ValuationScheme::Kind::MotzkinFlajolet;
    if (name == "lukas-free") return ValuationScheme::Kind::LukasFree;
    if (name == "lukas-classical") return ValuationScheme::Kind::LukasClassical;
    throw UsageError("unknown scheme '" + name + "'");
}

std::uint64_t config_bound() {
    if (const char* env = std::getenv("MOMENTLAB_MAX_CONFIGS")) {
        try {
            return std::stoull(env);
        } catch (const std::logic_error&) {
            throw UsageError(std::string("MOMENTLAB_MAX_CONFIGS is not a number: ") + env);
        }
    }
    return kDefaultConfigBound;
}

// ---------------------------------------------------------------- paths

struct PathsArgs {
    std::size_t n = 0;
    std::string discipline = "motzkin";
    bool irreducible = false;
    std::string path;
    std::string scheme = "motzkin";
};

void cmd_paths_enumerate(const Io& io, const PathsArgs& a) {
    Discipline d = a.discipline == "motzkin" ? Discipline::Motzkin : Discipline::Lukasiewicz;
    std::size_t count = 0;
    for_each_path(a.n, d, a.irreducible, [&](const LatticePath& p) {
        io.out << p.to_string() << "\n";
        ++count;
    });
    io.out << "count: " << count << "\n";
}

void cmd_paths_factorize(const Io& io, const PathsArgs& a) {
    const LatticePath p = LatticePath::parse(a.path);
    for (const auto& f : factorize_irreducible(p)) io.out << f.to_string() << "\n";
    io.out << "returns: " << returns_to_zero(p) << "\n";
}

void cmd_paths_valuate(const Io& io, const PathsArgs& a) {
    const LatticePath p = LatticePath::parse(a.path);
    const auto scheme = ValuationScheme::symbolic(parse_scheme(a.scheme), p.length());
    io.out << valuate(p, scheme).to_string() << "\n";
}

// ---------------------------------------------------------------- transform

struct TransformArgs {
    std::string from;
    std::string to;
    std::optional<std::size_t> order;
    bool symbolic = false;
};

DocumentKind require_kind(const std::string& name) {
    auto k = parse_document_kind(name);
    if (!k) throw UsageError("unknown sequence kind '" + name + "'");
    return *k;
}

MomentSeq moments_of(const SequenceDocument& doc, std::optional<std::size_t> order) {
    switch (doc.kind) {
        case DocumentKind::Moments: {
            MomentSeq m = doc.moments();
            return order ? m.truncated(*order) : m;
        }
        case DocumentKind::Jacobi: {
            const std::size_t depth = doc.jacobi.depth();
            return moments_from_jacobi(doc.jacobi, order ? *order : (depth == 0 ? 0 : 2 * depth - 1));
        }
        default: {
            CumulantSeq c = doc.cumulants();
            return to_moments(order ? c.truncated(*order) : c);
        }
    }
}

SequenceDocument convert(const SequenceDocument& input, DocumentKind to, std::optional<std::size_t> order) {
    if (input.kind == to && to != DocumentKind::Jacobi) {
        SequenceDocument out = input;
        if (order) {
            out.values = to == DocumentKind::Moments ? input.moments().truncated(*order).values()
                                                     : input.cumulants().truncated(*order).values();
        }
        return out;
    }
    const MomentSeq m = moments_of(input, order);
    if (to == DocumentKind::Moments) return SequenceDocument::from(m, input.symbolic);
    if (to == DocumentKind::Jacobi) return SequenceDocument::from(jacobi_from_moments(m), input.symbolic);
    return SequenceDocument::from(from_moments(m, *cumulant_kind(to)), input.symbolic);
}

SequenceDocument symbolic_input(DocumentKind kind, std::size_t order) {
    switch (kind) {
        case DocumentKind::Moments: return SequenceDocument::from(symbolic_moments(order), true);
        case DocumentKind::Jacobi: return SequenceDocument::from(JacobiParams::symbolic_for_order(order), true);
        default: return SequenceDocument::from(symbolic_cumulants(*cumulant_kind(kind), order), true);
    }
}

void cmd_transform(const Io& io, const TransformArgs& a) {
    const DocumentKind to = require_kind(a.to);
    SequenceDocument input;
    if (a.symbolic) {
        if (a.from.empty() || !a.order) throw UsageError("--symbolic needs --from and --order");
        input = symbolic_input(require_kind(a.from), *a.order);
    } else {
        input = read_document(io.in);
        if (!a.from.empty() && require_kind(a.from) != input.kind) {
            throw UsageError("--from " + a.from + " but input is " + std::string(to_string(input.kind)));
        }
    }
    write_document(io, convert(input, to, a.order));
}

// ---------------------------------------------------------------- jacobi

struct JacobiArgs {
    std::optional<std::size_t> order;
    std::size_t n = 3;
    bool symbolic = false;
    std::string method = "recurrence";
};

void cmd_jacobi_from_moments(const Io& io, const JacobiArgs& a) {
    SequenceDocument input = a.symbolic ? symbolic_input(DocumentKind::Moments, a.order.value_or(3))
                                        : read_document(io.in);
    write_document(io, convert(input, DocumentKind::Jacobi, a.symbolic ? std::nullopt : a.order));
}

void cmd_jacobi_to_moments(const Io& io, const JacobiArgs& a) {
    SequenceDocument input;
    if (a.symbolic) {
        if (!a.order) throw UsageError("--symbolic needs --order");
        input = symbolic_input(DocumentKind::Jacobi, *a.order);
    } else {
        input = read_document(io.in);
    }
    if (input.kind != DocumentKind::Jacobi) throw UsageError("jacobi to-moments expects a jacobi document");
    write_document(io, SequenceDocument::from(moments_of(input, a.order), input.symbolic));
}

void cmd_jacobi_orthopoly(const Io& io, const JacobiArgs& a) {
    SequenceDocument input = a.symbolic ? symbolic_input(DocumentKind::Jacobi, 2 * a.n) : read_document(io.in);
    MonicPolySeq polys;
    if (a.method == "determinant") {
        const MomentSeq m = moments_of(input, input.kind == DocumentKind::Moments ? std::nullopt
                                                                                   : std::optional(2 * a.n));
        for (std::size_t k = 0; k <= a.n; ++k) polys.push_back(orthopoly_determinant(m, k));
    } else if (a.method == "recurrence") {
        const JacobiParams j = input.kind == DocumentKind::Jacobi ? input.jacobi
                                                                  : jacobi_from_moments(moments_of(input, std::nullopt));
        polys = orthopoly_recurrence(j, a.n);
    } else {
        throw UsageError("unknown method '" + a.method + "'");
    }
    Json j;
    j["v"] = kDocumentVersion;
    j["kind"] = "orthopoly";
    j["n"] = a.n;
    j["method"] = a.method;
    Json terms = Json::array();
    Json text = Json::array();
    for (const auto& p : polys) {
        terms.push_back(poly_to_json(p));
        text.push_back(p.to_string());
    }
    j["polys"] = terms;
    j["text"] = text;
    io.out << j.dump() << "\n";
}

// ---------------------------------------------------------------- minor

struct MinorArgs {
    std::string rows;
    std::string cols;
    std::string method = "det";
    std::string scheme = "motzkin";
    bool terms = false;
};

void cmd_minor(const Io& io, const MinorArgs& a) {
    HankelMinorSpec spec = [&] {
        try {
            return HankelMinorSpec(parse_index_list(a.rows), parse_index_list(a.cols));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    const auto kind = parse_scheme(a.scheme);
    const std::size_t len = std::max<std::size_t>(spec.max_moment(), 1);
    Json j;
    j["v"] = kDocumentVersion;
    j["kind"] = "minor";
    j["rows"] = spec.rows();
    j["cols"] = spec.cols();
    j["method"] = a.method;
    j["scheme"] = a.scheme;
    MultiPoly value;
    if (a.method == "det") {
        MomentSeq m = [&] {
            switch (kind) {
                case ValuationScheme::Kind::MotzkinFlajolet:
                    return moments_from_jacobi(JacobiParams::symbolic_for_order(len), len);
                case ValuationScheme::Kind::LukasFree:
                    return moments_from_free(symbolic_cumulants(CumulantKind::Free, len));
                case ValuationScheme::Kind::LukasClassical:
                    break;
            }
            return moments_from_classical(symbolic_cumulants(CumulantKind::Classical, len));
        }();
        value = hankel_minor_det(m, spec);
    } else if (a.method == "gv") {
        const GvResult r = hankel_minor_gv(ValuationScheme::symbolic(kind, len), spec, a.terms, config_bound());
        value = r.value;
        j["configurations"] = r.configurations;
        if (a.terms) {
            Json list = Json::array();
            for (const auto& t : r.terms) {
                Json paths = Json::array();
                for (const auto& p : t.paths) paths.push_back(p.to_string());
                list.push_back(Json{{"perm", t.perm}, {"sign", t.sign}, {"paths", paths},
                                    {"value", (t.sign > 0 ? t.valuation : -t.valuation).to_string()}});
            }
            j["terms"] = list;
        }
    } else {
        throw UsageError("unknown method '" + a.method + "'");
    }
    j["value"] = poly_to_json(value);
    j["text"] = value.to_string();
    io.out << j.dump() << "\n";
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::size_t depth = 4;
    std::string identity;
    std::string perturb;
};

int cmd_verify(const Io& io, const VerifyArgs& a) {
    VerifyOptions options;
    options.only = a.identity;
    options.perturb = a.perturb;
    VerifyReport report;
    try {
        report = verify_suite(a.depth, options);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Json j;
    j["v"] = kDocumentVersion;
    j["kind"] = "verify";
    j["depth"] = report.depth;
    j["passed"] = report.all_passed();
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        entries.push_back(
            Json{{"identity", e.identity}, {"passed", e.passed}, {"cases", e.cases}, {"detail", e.detail}});
    }
    j["entries"] = entries;
    io.out << j.dump(2) << "\n";
    return report.all_passed() ? 0 : 1;
}

// ---------------------------------------------------------------- catalog

struct CatalogArgs {
    std::string name;
    std::string t = "1";
    std::size_t order = 8;
    std::string as = "moments";
};

void cmd_catalog(const Io& io, const CatalogArgs& a) {
    const bool symbolic = a.t == "t";
    const MultiPoly t = symbolic ? MultiPoly(sym_t()) : MultiPoly(Rational::parse(a.t));
    const DocumentKind as = require_kind(a.as);
    SequenceDocument native;
    if (a.name == "semicircle") {
        native = as == DocumentKind::Jacobi ? SequenceDocument::from(catalog::semicircle_jacobi(a.order), false)
                                            : SequenceDocument::from(catalog::semicircle(a.order), false);
    } else if (a.name == "gaussian-hermite") {
        native = as == DocumentKind::Jacobi ? SequenceDocument::from(catalog::gaussian_hermite_jacobi(a.order), false)
                                            : SequenceDocument::from(catalog::gaussian_hermite(a.order), false);
    } else if (a.name == "point-mass") {
        native = SequenceDocument::from(catalog::point_mass(t, a.order), symbolic);
    } else if (a.name == "free-poisson") {
        native = SequenceDocument::from(catalog::free_poisson_cumulants(t, a.order), symbolic);
    } else {
        throw UsageError("unknown catalog entry '" + a.name + "'");
    }
    if (native.kind == as) {
        write_document(io, native);
        return;
    }
    // Jacobi output of depth K needs moments up to 2K - 1.
    const std::optional<std::size_t> order =
        as == DocumentKind::Jacobi || native.kind == DocumentKind::Jacobi ? std::nullopt : std::optional(a.order);
    write_document(io, convert(native, as, order));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact moment, cumulant, and Jacobi-parameter conversions with lattice-path verification",
                 "momentlab"};
    app.require_subcommand(1);
    app.fallthrough();
    int status = 0;
    Io io{in, out, false};
    app.add_flag("--float", io.float_output, "Render numeric values as decimal approximations (not re-readable)");

    // paths
    PathsArgs pa;
    auto* paths = app.add_subcommand("paths", "Lattice path enumeration and valuation");
    paths->require_subcommand(1);
    auto* enumerate = paths->add_subcommand("enumerate", "Print every path of a given length");
    enumerate->add_option("--n", pa.n, "Path length")->required();
    enumerate->add_option("--discipline", pa.discipline, "motzkin or lukasiewicz")
        ->check(CLI::IsMember({"motzkin", "lukasiewicz"}));
    enumerate->add_flag("--irreducible", pa.irreducible, "Only paths that touch level 0 at their ends");
    enumerate->callback([&] { cmd_paths_enumerate(io, pa); });
    auto* factorize = paths->add_subcommand("factorize", "Split a path into irreducible factors");
    factorize->add_option("path", pa.path, "Level sequence, e.g. 0,1,0,0")->required();
    factorize->callback([&] { cmd_paths_factorize(io, pa); });
    auto* valuate_cmd = paths->add_subcommand("valuate", "Symbolic valuation of a path");
    valuate_cmd->add_option("path", pa.path, "Level sequence")->required();
    valuate_cmd->add_option("--scheme", pa.scheme, "motzkin, lukas-free or lukas-classical");
    valuate_cmd->callback([&] { cmd_paths_valuate(io, pa); });

    // transform
    TransformArgs ta;
    auto* transform = app.add_subcommand("transform", "Convert between moments, cumulants and Jacobi parameters");
    transform->add_option("--from", ta.from, "Input kind (default: the input document's kind)");
    transform->add_option("--to", ta.to, "moments, free, classical, boolean or jacobi")->required();
    transform->add_option("--order", ta.order, "Truncation order");
    transform->add_flag("--symbolic", ta.symbolic, "Use indexed symbols as input instead of reading stdin");
    transform->callback([&] { cmd_transform(io, ta); });

    // jacobi
    JacobiArgs ja;
    auto* jacobi = app.add_subcommand("jacobi", "Jacobi parameters and orthogonal polynomials");
    jacobi->require_subcommand(1);
    auto* from_m = jacobi->add_subcommand("from-moments", "Moments (stdin) to Jacobi parameters");
    from_m->add_option("--order", ja.order, "Use moments up to this order");
    from_m->add_flag("--symbolic", ja.symbolic, "Symbolic moments mu_1..mu_N");
    from_m->callback([&] { cmd_jacobi_from_moments(io, ja); });
    auto* to_m = jacobi->add_subcommand("to-moments", "Jacobi parameters (stdin) to moments");
    to_m->add_option("--order", ja.order, "Highest moment (default 2*depth-1)");
    to_m->add_flag("--symbolic", ja.symbolic, "Symbolic a_n, lambda_n");
    to_m->callback([&] { cmd_jacobi_to_moments(io, ja); });
    auto* ortho = jacobi->add_subcommand("orthopoly", "Monic orthogonal polynomials P_0..P_n");
    ortho->add_option("--n", ja.n, "Highest degree");
    ortho->add_option("--method", ja.method, "recurrence or determinant");
    ortho->add_flag("--symbolic", ja.symbolic, "Symbolic a_n, lambda_n");
    ortho->callback([&] { cmd_jacobi_orthopoly(io, ja); });

    // minor
    MinorArgs ma;
    auto* minor = app.add_subcommand("minor", "Hankel minor by determinant or by non-intersecting paths");
    minor->add_option("--rows", ma.rows, "Increasing row indices, e.g. 0,1,2")->required();
    minor->add_option("--cols", ma.cols, "Increasing column indices")->required();
    minor->add_option("--method", ma.method, "det or gv")->check(CLI::IsMember({"det", "gv"}));
    minor->add_option("--scheme", ma.scheme, "motzkin, lukas-free or lukas-classical");
    minor->add_flag("--terms", ma.terms, "List every path configuration (gv only)");
    minor->callback([&] { cmd_minor(io, ma); });

    // verify
    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run the cross-checked identity suite");
    verify->add_option("--depth", va.depth, "Symbolic order bound");
    verify->add_option("--identity", va.identity, "Only this identity class (eq13, gv, boolean, delta-product, ...)");
    verify->add_option("--perturb", va.perturb, "Self-test: corrupt the oracle of one identity")->group("");
    verify->callback([&] { status = cmd_verify(io, va); });

    // catalog
    CatalogArgs ca;
    auto* cat = app.add_subcommand("catalog", "Built-in named inputs");
    cat->add_option("name", ca.name, "semicircle, gaussian-hermite, point-mass, free-poisson")->required();
    cat->add_option("t", ca.t, "Parameter for point-mass / free-poisson (rational, or 't' for a symbol)");
    cat->add_option("--order", ca.order, "Order (depth for --as jacobi)");
    cat->add_option("--as", ca.as, "Output kind: moments, free, classical, boolean, jacobi");
    cat->callback([&] { cmd_catalog(io, ca); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        out << error_to_json(e).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}

}  // namespace momentlab
