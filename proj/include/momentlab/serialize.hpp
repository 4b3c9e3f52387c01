#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "momentlab/error.hpp"
#include "momentlab/jacobi.hpp"
#include "momentlab/multipoly.hpp"
#include "momentlab/series.hpp"
#include "momentlab/transforms.hpp"

namespace momentlab {

using Json = nlohmann::ordered_json;

constexpr int kDocumentVersion = 1;

/// Polynomials serialize as a term list, leading term first:
///   [["-1","a_0*lambda_1"], ["1","a_1*lambda_1"]]   (constant monomial is "1", zero is []).
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

/// Series: {"order": N, "coeffs": [poly, ...]}.
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

enum class DocumentKind { Moments, Free, Classical, Boolean, Jacobi };

std::string_view to_string(DocumentKind kind);
std::optional<DocumentKind> parse_document_kind(std::string_view text);

/// The exchange format of the command-line tool, one JSON object per line:
///   {"v":1,"kind":"moments","order":N,"symbolic":false,"values":["1","0","1",...]}
///   {"v":1,"kind":"jacobi","order":K,"symbolic":false,"a":[...],"lambda":[...]}
/// Numeric values are rational strings; symbolic values are term lists.
/// Moments are indexed from 0, cumulants from 1.
struct SequenceDocument {
    DocumentKind kind = DocumentKind::Moments;
    bool symbolic = false;
    std::vector<MultiPoly> values;  // moments or cumulants
    JacobiParams jacobi;            // kind == Jacobi

    std::size_t order() const;

    static SequenceDocument from(const MomentSeq& m, bool symbolic);
    static SequenceDocument from(const CumulantSeq& c, bool symbolic);
    static SequenceDocument from(const JacobiParams& j, bool symbolic);

    MomentSeq moments() const;          // kind must be Moments
    CumulantSeq cumulants() const;      // kind must be a cumulant kind

    Json to_json() const;
    static SequenceDocument from_json(const Json& j);

    /// Canonical one-line text (with trailing newline); parse(print(d)) == d.
    std::string print() const;
    static SequenceDocument parse(std::string_view text);
};

std::optional<CumulantKind> cumulant_kind(DocumentKind kind);
DocumentKind document_kind(CumulantKind kind);

Json error_to_json(const MathError& e);

}  // namespace momentlab
