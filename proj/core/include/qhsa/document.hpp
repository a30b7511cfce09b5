#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhsa/structure.hpp"

namespace qhsa {

struct SparseEntry2 {
    std::uint32_t i, j;
    Scalar coeff;
    friend bool operator==(const SparseEntry2&, const SparseEntry2&) = default;
};

struct SparseEntry3 {
    std::uint32_t i, j, k;
    Scalar coeff;
    friend bool operator==(const SparseEntry3&, const SparseEntry3&) = default;
};

/// Serialized form of a QhsaStructure. Basis vectors are referred to by index.
///   mult:     e_i e_j has coefficient c at e_k, as (i, j, k, c)
///   delta:    for each basis i, Delta(e_i) as terms (j, k, c) of e_j (x) e_k
///   antipode: S(e_i) has coefficient c at e_j, as (i, j, c)
///   phi, r:   sparse coefficients over basis words
/// Parsed and converted documents are canonical: zero coefficients dropped,
/// sparse lists sorted by index tuple.
struct StructureDocument {
    std::string name;
    FieldSpec field;
    std::uint32_t dimension = 0;
    std::vector<std::uint8_t> parity;
    std::vector<Scalar> unit;
    std::vector<SparseEntry3> mult;
    std::vector<std::vector<SparseEntry2>> delta;
    std::vector<Scalar> epsilon;
    std::vector<SparseEntry2> antipode;
    std::vector<SparseEntry3> phi;
    std::vector<Scalar> alpha;
    std::vector<Scalar> beta;
    std::optional<std::vector<SparseEntry2>> r;

    friend bool operator==(const StructureDocument&, const StructureDocument&) = default;
};

/// Serialized twistor. The twistor it denotes is scale * element with inverse
/// scale^-1 * inverse; scale defaults to 1 and lets an unnormalized element
/// such as F_D be stored together with its normalization.
struct TwistorDocument {
    std::string name;
    FieldSpec field;
    std::uint32_t dimension = 0;
    std::vector<SparseEntry2> element;
    std::optional<std::vector<SparseEntry2>> inverse;
    std::optional<Scalar> scale;

    friend bool operator==(const TwistorDocument&, const TwistorDocument&) = default;
};

/// Strict JSON: unknown or duplicate keys, out-of-range indices, duplicate
/// index tuples and malformed scalars are errors. Throws ParseError with the
/// offending field and position.
StructureDocument parse_structure(std::string_view text);
/// Canonical text: fixed key order, one tuple per line, trailing newline.
std::string serialize_structure(const StructureDocument& doc);

TwistorDocument parse_twistor(std::string_view text);
std::string serialize_twistor(const TwistorDocument& doc);

QhsaStructure to_structure(const StructureDocument& doc);
StructureDocument to_document(const QhsaStructure& h);

/// The element and declared inverse (if any) of a twistor document, scaled,
/// over the given algebra. Throws DomainError on dimension mismatch and
/// FieldMismatchError on field mismatch.
std::pair<TensorElement, std::optional<TensorElement>> twistor_elements(const TwistorDocument& doc,
                                                                          const AlgebraPtr& algebra);
TwistorDocument to_twistor_document(const std::string& name, const TensorElement& element,
                                    const std::optional<TensorElement>& inverse,
                                    const std::optional<Scalar>& scale = std::nullopt);

/// Reads a whole file. Throws Error on IO failure.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

QhsaStructure load_structure(const std::filesystem::path& path);
TwistorDocument load_twistor(const std::filesystem::path& path);

} // namespace qhsa
