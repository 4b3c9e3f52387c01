#include "momentlab/serialize.hpp"

#include <stdexcept>

namespace momentlab {

namespace {

[[noreturn]] void bad_document(const std::string& what) { throw MathError(ErrorKind::ParseError, what); }

Json value_to_json(const MultiPoly& p, bool symbolic) {
    if (symbolic) return poly_to_json(p);
    auto c = p.constant_value();
    if (!c) throw std::invalid_argument("non-constant value " + p.to_string() + " in a numeric document");
    return c->to_string();
}

MultiPoly value_from_json(const Json& j, bool symbolic) {
    if (symbolic) return poly_from_json(j);
    if (!j.is_string()) bad_document("numeric values must be rational strings");
    return MultiPoly(Rational::parse(j.get<std::string>()));
}

Json list_to_json(const std::vector<MultiPoly>& values, bool symbolic) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(value_to_json(v, symbolic));
    return arr;
}

std::vector<MultiPoly> list_from_json(const Json& j, const char* key, bool symbolic) {
    if (!j.contains(key) || !j[key].is_array()) bad_document(std::string("missing array '") + key + "'");
    std::vector<MultiPoly> out;
    for (const auto& item : j[key]) out.push_back(value_from_json(item, symbolic));
    return out;
}

}  // namespace

Json poly_to_json(const MultiPoly& p) {
    Json arr = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        arr.push_back(Json::array({it->second.to_string(), it->first.to_string()}));
    }
    return arr;
}

MultiPoly poly_from_json(const Json& j) {
    if (!j.is_array()) bad_document("polynomial must be a term list");
    MultiPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_string() || !term[1].is_string()) {
            bad_document("polynomial term must be [coefficient, monomial]");
        }
        const Rational c = Rational::parse(term[0].get<std::string>());
        p += MultiPoly::parse(term[1].get<std::string>()) * c;
    }
    return p;
}

Json series_to_json(const TruncatedSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(poly_to_json(c));
    return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) bad_document("series needs order and coeffs");
    const auto order = j["order"].get<std::size_t>();
    std::vector<MultiPoly> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(poly_from_json(c));
    if (coeffs.size() != order + 1) bad_document("series coefficient count does not match order");
    return TruncatedSeries(order, std::move(coeffs));
}

std::string_view to_string(DocumentKind kind) {
    switch (kind) {
        case DocumentKind::Moments: return "moments";
        case DocumentKind::Free: return "free";
        case DocumentKind::Classical: return "classical";
        case DocumentKind::Boolean: return "boolean";
        case DocumentKind::Jacobi: return "jacobi";
    }
    return "?";
}

std::optional<DocumentKind> parse_document_kind(std::string_view text) {
    for (auto k : {DocumentKind::Moments, DocumentKind::Free, DocumentKind::Classical, DocumentKind::Boolean,
                   DocumentKind::Jacobi}) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

std::optional<CumulantKind> cumulant_kind(DocumentKind kind) {
    switch (kind) {
        case DocumentKind::Free: return CumulantKind::Free;
        case DocumentKind::Classical: return CumulantKind::Classical;
        case DocumentKind::Boolean: return CumulantKind::Boolean;
        default: return std::nullopt;
    }
}

DocumentKind document_kind(CumulantKind kind) {
    switch (kind) {
        case CumulantKind::Free: return DocumentKind::Free;
        case CumulantKind::Classical: return DocumentKind::Classical;
        case CumulantKind::Boolean: return DocumentKind::Boolean;
    }
    return DocumentKind::Free;
}

std::size_t SequenceDocument::order() const {
    switch (kind) {
        case DocumentKind::Moments: return values.empty() ? 0 : values.size() - 1;
        case DocumentKind::Jacobi: return jacobi.depth();
        default: return values.size();
    }
}

SequenceDocument SequenceDocument::from(const MomentSeq& m, bool symbolic) {
    return {DocumentKind::Moments, symbolic, m.values(), {}};
}

SequenceDocument SequenceDocument::from(const CumulantSeq& c, bool symbolic) {
    return {document_kind(c.kind()), symbolic, c.values(), {}};
}

SequenceDocument SequenceDocument::from(const JacobiParams& j, bool symbolic) {
    return {DocumentKind::Jacobi, symbolic, {}, j};
}

MomentSeq SequenceDocument::moments() const {
    if (kind != DocumentKind::Moments) bad_document("expected a moments document, got " + std::string(to_string(kind)));
    return MomentSeq(values);
}

CumulantSeq SequenceDocument::cumulants() const {
    auto k = cumulant_kind(kind);
    if (!k) bad_document("expected a cumulant document, got " + std::string(to_string(kind)));
    return {*k, values};
}

Json SequenceDocument::to_json() const {
    Json j;
    j["v"] = kDocumentVersion;
    j["kind"] = std::string(to_string(kind));
    j["order"] = order();
    j["symbolic"] = symbolic;
    if (kind == DocumentKind::Jacobi) {
        j["a"] = list_to_json(jacobi.a, symbolic);
        j["lambda"] = list_to_json(jacobi.lambda, symbolic);
    } else {
        j["values"] = list_to_json(values, symbolic);
    }
    return j;
}

SequenceDocument SequenceDocument::from_json(const Json& j) {
    if (!j.is_object()) bad_document("document must be a JSON object");
    if (j.contains("error")) {
        const std::string name = j["error"].is_string() ? j["error"].get<std::string>() : "error";
        bad_document("input is an error document (" + name + ")");
    }
    if (!j.contains("v") || j["v"] != kDocumentVersion) bad_document("unsupported document version");
    if (!j.contains("kind") || !j["kind"].is_string()) bad_document("missing kind");
    auto kind = parse_document_kind(j["kind"].get<std::string>());
    if (!kind) bad_document("unknown kind '" + j["kind"].get<std::string>() + "'");
    SequenceDocument doc;
    doc.kind = *kind;
    doc.symbolic = j.contains("symbolic") && j["symbolic"].get<bool>();
    if (*kind == DocumentKind::Jacobi) {
        doc.jacobi.a = list_from_json(j, "a", doc.symbolic);
        doc.jacobi.lambda = list_from_json(j, "lambda", doc.symbolic);
    } else {
        doc.values = list_from_json(j, "values", doc.symbolic);
        if (*kind == DocumentKind::Moments) MomentSeq check(doc.values);
    }
    if (j.contains("order") && j["order"].get<std::size_t>() != doc.order()) bad_document("order does not match values");
    return doc;
}

std::string SequenceDocument::print() const { return to_json().dump() + "\n"; }

SequenceDocument SequenceDocument::parse(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        bad_document(std::string("invalid JSON: ") + e.what());
    }
    try {
        return from_json(j);
    } catch (const nlohmann::json::exception& e) {
        bad_document(std::string("malformed document: ") + e.what());
    }
}

Json error_to_json(const MathError& e) {
    Json j;
    j["v"] = kDocumentVersion;
    j["error"] = std::string(to_string(e.kind()));
    if (e.index()) j["index"] = *e.index();
    j["message"] = e.what();
    return j;
}

}  // namespace momentlab
