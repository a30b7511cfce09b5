#include "qhsa/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qhsa {

namespace {

using Json = nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Parses JSON rejecting duplicate object keys.
Json parse_strict_json(std::string_view text) {
    std::vector<std::set<std::string>> keys;
    auto callback = [&](int, Json::parse_event_t event, Json& parsed) {
        switch (event) {
        case Json::parse_event_t::object_start: keys.emplace_back(); break;
        case Json::parse_event_t::object_end: keys.pop_back(); break;
        case Json::parse_event_t::key: {
            auto key = parsed.get<std::string>();
            if (!keys.back().insert(key).second) throw ParseError("duplicate key '" + key + "'");
            break;
        }
        default: break;
        }
        return true;
    };
    try {
        return Json::parse(text.begin(), text.end(), callback);
    } catch (const Json::parse_error& e) {
        std::string detail = e.what();
        auto column = detail.find("column");
        auto colon = detail.find(": ", column == std::string::npos ? 0 : column);
        if (colon != std::string::npos) detail = detail.substr(colon + 2);
        throw ParseError("malformed JSON at " + line_column(text, e.byte) + ": " + detail);
    }
}

class Reader {
public:
    Reader(const Json& root, std::vector<std::string> allowed, std::vector<std::string> required)
        : root_(root) {
        if (!root.is_object()) throw ParseError("document must be a JSON object");
        for (const auto& [key, value] : root.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
                throw ParseError("unknown key '" + key + "'");
            }
        }
        for (const auto& key : required) {
            if (!root.contains(key)) throw ParseError("missing key '" + key + "'");
        }
    }

    bool has(const std::string& key) const { return root_.contains(key); }
    const Json& at(const std::string& key) const { return root_.at(key); }

    std::string string(const std::string& key) const {
        const auto& v = at(key);
        if (!v.is_string()) throw ParseError("field '" + key + "' must be a string");
        return v.get<std::string>();
    }

    std::uint32_t count(const std::string& key) const {
        const auto& v = at(key);
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0 || v.get<std::uint64_t>() > 4096) {
            throw ParseError("field '" + key + "' must be a positive integer");
        }
        return v.get<std::uint32_t>();
    }

private:
    const Json& root_;
};

std::string where(const std::string& field, std::size_t entry) {
    return "field '" + field + "' entry " + std::to_string(entry);
}

const Json& array_of(const Json& v, const std::string& context) {
    if (!v.is_array()) throw ParseError(context + " must be an array");
    return v;
}

std::uint32_t index_of(const Json& v, std::uint32_t dimension, const std::string& context) {
    if (!v.is_number_unsigned()) throw ParseError(context + ": index must be a non-negative integer");
    auto i = v.get<std::uint64_t>();
    if (i >= dimension) {
        throw ParseError(context + ": index " + std::to_string(i) + " out of range for dimension " +
                         std::to_string(dimension));
    }
    return static_cast<std::uint32_t>(i);
}

Scalar scalar_of(const Json& v, FieldSpec field, const std::string& context) {
    if (!v.is_string()) throw ParseError(context + ": coefficient must be a string");
    try {
        return parse_scalar(v.get<std::string>(), field);
    } catch (const ParseError& e) {
        throw ParseError(context + ": " + e.what());
    }
}

std::vector<Scalar> dense_vector(const Json& v, FieldSpec field, std::uint32_t dimension, const std::string& key) {
    array_of(v, "field '" + key + "'");
    if (v.size() != dimension) {
        throw ParseError("field '" + key + "' has " + std::to_string(v.size()) + " entries, expected dimension " +
                         std::to_string(dimension));
    }
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(scalar_of(v[i], field, where(key, i)));
    return out;
}

const Json& tuple_of(const Json& v, std::size_t size, const std::string& context) {
    if (!v.is_array() || v.size() != size) {
        throw ParseError(context + " must be an array of " + std::to_string(size) + " elements");
    }
    return v;
}

template <typename Entry, typename Key>
void canonicalize(std::vector<Entry>& entries, Key key, const std::string& field) {
    std::stable_sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) { return key(a) < key(b); });
    for (std::size_t n = 1; n < entries.size(); ++n) {
        if (key(entries[n - 1]) == key(entries[n])) throw ParseError("duplicate index tuple in field '" + field + "'");
    }
    std::erase_if(entries, [](const Entry& e) { return e.coeff.is_zero(); });
}

auto key2 = [](const SparseEntry2& e) { return std::pair(e.i, e.j); };
auto key3 = [](const SparseEntry3& e) { return std::tuple(e.i, e.j, e.k); };

std::vector<SparseEntry2> sparse2(const Json& v, FieldSpec field, std::uint32_t dimension, const std::string& key) {
    array_of(v, "field '" + key + "'");
    std::vector<SparseEntry2> out;
    for (std::size_t n = 0; n < v.size(); ++n) {
        auto ctx = where(key, n);
        const auto& t = tuple_of(v[n], 3, ctx);
        out.push_back({index_of(t[0], dimension, ctx), index_of(t[1], dimension, ctx), scalar_of(t[2], field, ctx)});
    }
    canonicalize(out, key2, key);
    return out;
}

std::vector<SparseEntry3> sparse3(const Json& v, FieldSpec field, std::uint32_t dimension, const std::string& key) {
    array_of(v, "field '" + key + "'");
    std::vector<SparseEntry3> out;
    for (std::size_t n = 0; n < v.size(); ++n) {
        auto ctx = where(key, n);
        const auto& t = tuple_of(v[n], 4, ctx);
        out.push_back({index_of(t[0], dimension, ctx), index_of(t[1], dimension, ctx), index_of(t[2], dimension, ctx),
                       scalar_of(t[3], field, ctx)});
    }
    canonicalize(out, key3, key);
    return out;
}

FieldSpec field_of(const Reader& r) {
    try {
        return parse_field_spec(r.string("field"));
    } catch (const ParseError& e) {
        throw ParseError(std::string("field 'field': ") + e.what());
    }
}

std::string quoted(const std::string& s) {
    return Json(s).dump();
}

std::string quoted(const Scalar& s) {
    return quoted(to_string(s));
}

std::string dense_line(const std::vector<Scalar>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + quoted(v[i]);
    return out + "]";
}

std::string tuple_text(const SparseEntry2& e) {
    return "[" + std::to_string(e.i) + ", " + std::to_string(e.j) + ", " + quoted(e.coeff) + "]";
}

std::string tuple_text(const SparseEntry3& e) {
    return "[" + std::to_string(e.i) + ", " + std::to_string(e.j) + ", " + std::to_string(e.k) + ", " +
           quoted(e.coeff) + "]";
}

template <typename Entry>
std::string block(const std::vector<Entry>& entries) {
    if (entries.empty()) return "[]";
    std::string out = "[\n";
    for (std::size_t n = 0; n < entries.size(); ++n) {
        out += "    " + tuple_text(entries[n]) + (n + 1 < entries.size() ? ",\n" : "\n");
    }
    return out + "  ]";
}

template <typename Entry>
std::vector<Entry> sorted_nonzero(std::vector<Entry> entries) {
    std::erase_if(entries, [](const Entry& e) { return e.coeff.is_zero(); });
    if constexpr (std::is_same_v<Entry, SparseEntry2>) {
        std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return key2(a) < key2(b); });
    } else {
        std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return key3(a) < key3(b); });
    }
    return entries;
}

std::vector<SparseEntry2> entries2(const TensorElement& x) {
    std::vector<SparseEntry2> out;
    for (const auto& [k, c] : x.terms()) {
        auto w = x.decode(k);
        out.push_back({w[0], w[1], c});
    }
    return out;
}

TensorElement element2(const AlgebraPtr& alg, const std::vector<SparseEntry2>& entries) {
    TensorElement out(alg, 2);
    for (const auto& e : entries) out.add_term({e.i, e.j}, e.coeff);
    return out;
}

} // namespace

StructureDocument parse_structure(std::string_view text) {
    Json root = parse_strict_json(text);
    Reader r(root,
             {"name", "field", "dimension", "parity", "unit", "mult", "delta", "epsilon", "antipode", "phi", "alpha",
              "beta", "r"},
             {"name", "field", "dimension", "parity", "unit", "mult", "delta", "epsilon", "antipode", "phi", "alpha",
              "beta"});
    StructureDocument doc;
    doc.name = r.string("name");
    doc.field = field_of(r);
    doc.dimension = r.count("dimension");
    const auto d = doc.dimension;

    const auto& parity = array_of(r.at("parity"), "field 'parity'");
    if (parity.size() != d) throw ParseError("field 'parity' length does not match dimension");
    for (std::size_t i = 0; i < parity.size(); ++i) {
        if (!parity[i].is_number_unsigned() || parity[i].get<std::uint64_t>() > 1) {
            throw ParseError(where("parity", i) + ": parity must be 0 or 1");
        }
        doc.parity.push_back(parity[i].get<std::uint8_t>());
    }
    doc.unit = dense_vector(r.at("unit"), doc.field, d, "unit");
    doc.mult = sparse3(r.at("mult"), doc.field, d, "mult");

    const auto& delta = array_of(r.at("delta"), "field 'delta'");
    if (delta.size() != d) throw ParseError("field 'delta' must list one coproduct per basis vector");
    for (std::size_t i = 0; i < delta.size(); ++i) {
        doc.delta.push_back(sparse2(delta[i], doc.field, d, "delta[" + std::to_string(i) + "]"));
    }
    doc.epsilon = dense_vector(r.at("epsilon"), doc.field, d, "epsilon");
    doc.antipode = sparse2(r.at("antipode"), doc.field, d, "antipode");
    doc.phi = sparse3(r.at("phi"), doc.field, d, "phi");
    doc.alpha = dense_vector(r.at("alpha"), doc.field, d, "alpha");
    doc.beta = dense_vector(r.at("beta"), doc.field, d, "beta");
    if (r.has("r")) doc.r = sparse2(r.at("r"), doc.field, d, "r");
    return doc;
}

std::string serialize_structure(const StructureDocument& doc) {
    std::string out = "{\n";
    out += "  \"name\": " + quoted(doc.name) + ",\n";
    out += "  \"field\": " + quoted(to_string(doc.field)) + ",\n";
    out += "  \"dimension\": " + std::to_string(doc.dimension) + ",\n";
    out += "  \"parity\": [";
    for (std::size_t i = 0; i < doc.parity.size(); ++i) out += (i ? ", " : "") + std::to_string(doc.parity[i]);
    out += "],\n";
    out += "  \"unit\": " + dense_line(doc.unit) + ",\n";
    out += "  \"mult\": " + block(sorted_nonzero(doc.mult)) + ",\n";
    out += "  \"delta\": [\n";
    for (std::size_t i = 0; i < doc.delta.size(); ++i) {
        auto terms = sorted_nonzero(doc.delta[i]);
        out += "    [";
        for (std::size_t n = 0; n < terms.size(); ++n) out += (n ? ", " : "") + tuple_text(terms[n]);
        out += i + 1 < doc.delta.size() ? "],\n" : "]\n";
    }
    out += "  ],\n";
    out += "  \"epsilon\": " + dense_line(doc.epsilon) + ",\n";
    out += "  \"antipode\": " + block(sorted_nonzero(doc.antipode)) + ",\n";
    out += "  \"phi\": " + block(sorted_nonzero(doc.phi)) + ",\n";
    out += "  \"alpha\": " + dense_line(doc.alpha) + ",\n";
    out += "  \"beta\": " + dense_line(doc.beta);
    if (doc.r) out += ",\n  \"r\": " + block(sorted_nonzero(*doc.r));
    out += "\n}\n";
    return out;
}

TwistorDocument parse_twistor(std::string_view text) {
    Json root = parse_strict_json(text);
    Reader r(root, {"name", "field", "dimension", "element", "inverse", "scale"},
             {"name", "field", "dimension", "element"});
    TwistorDocument doc;
    doc.name = r.string("name");
    doc.field = field_of(r);
    doc.dimension = r.count("dimension");
    doc.element = sparse2(r.at("element"), doc.field, doc.dimension, "element");
    if (r.has("inverse")) doc.inverse = sparse2(r.at("inverse"), doc.field, doc.dimension, "inverse");
    if (r.has("scale")) {
        doc.scale = scalar_of(r.at("scale"), doc.field, "field 'scale'");
        if (doc.scale->is_zero()) throw ParseError("field 'scale' must be nonzero");
    }
    return doc;
}

std::string serialize_twistor(const TwistorDocument& doc) {
    std::string out = "{\n";
    out += "  \"name\": " + quoted(doc.name) + ",\n";
    out += "  \"field\": " + quoted(to_string(doc.field)) + ",\n";
    out += "  \"dimension\": " + std::to_string(doc.dimension) + ",\n";
    out += "  \"element\": " + block(sorted_nonzero(doc.element));
    if (doc.inverse) out += ",\n  \"inverse\": " + block(sorted_nonzero(*doc.inverse));
    if (doc.scale) out += ",\n  \"scale\": " + quoted(*doc.scale);
    out += "\n}\n";
    return out;
}

QhsaStructure to_structure(const StructureDocument& doc) {
    const auto d = doc.dimension;
    std::vector<ProductEntry> products;
    for (const auto& e : doc.mult) products.push_back({e.i, e.j, e.k, e.coeff});
    auto alg = std::make_shared<const GradedAlgebra>(doc.field, doc.parity, doc.unit, products);

    std::vector<TensorElement> delta, epsilon, antipode;
    for (std::uint32_t i = 0; i < d; ++i) {
        delta.push_back(element2(alg, doc.delta.at(i)));
        epsilon.push_back(TensorElement::scalar(alg, doc.epsilon.at(i)));
        antipode.emplace_back(alg, 1);
    }
    for (const auto& e : doc.antipode) antipode[e.i].add_term({e.j}, e.coeff);
    TensorElement phi(alg, 3);
    for (const auto& e : doc.phi) phi.add_term({e.i, e.j, e.k}, e.coeff);

    QhsaStructure h{doc.name,
                    alg,
                    StructureMap(alg, 2, std::move(delta)),
                    StructureMap(alg, 0, std::move(epsilon)),
                    StructureMap(alg, 1, std::move(antipode)),
                    std::move(phi),
                    TensorElement::from_coordinates(alg, doc.alpha),
                    TensorElement::from_coordinates(alg, doc.beta),
                    std::nullopt};
    if (doc.r) h.r_matrix = element2(alg, *doc.r);
    return h;
}

StructureDocument to_document(const QhsaStructure& h) {
    check_shapes(h);
    const auto& alg = *h.algebra;
    const auto d = alg.dimension();
    StructureDocument doc;
    doc.name = h.name;
    doc.field = alg.field();
    doc.dimension = d;
    doc.parity.assign(alg.parities().begin(), alg.parities().end());
    doc.unit.assign(alg.unit().begin(), alg.unit().end());
    for (std::uint32_t i = 0; i < d; ++i) {
        for (std::uint32_t j = 0; j < d; ++j) {
            for (const auto& t : alg.product(i, j)) doc.mult.push_back({i, j, t.index, t.coeff});
        }
    }
    auto coords = [&](const TensorElement& x) {
        std::vector<Scalar> out(d, alg.zero());
        for (const auto& [k, c] : x.terms()) out[k] = c;
        return out;
    };
    for (std::uint32_t i = 0; i < d; ++i) {
        doc.delta.push_back(entries2(h.delta.image(i)));
        doc.epsilon.push_back(h.epsilon.image(i).scalar_value());
        for (const auto& [k, c] : h.antipode.image(i).terms()) {
            doc.antipode.push_back({i, static_cast<std::uint32_t>(k), c});
        }
    }
    for (const auto& [k, c] : h.phi.terms()) {
        auto w = h.phi.decode(k);
        doc.phi.push_back({w[0], w[1], w[2], c});
    }
    doc.alpha = coords(h.alpha);
    doc.beta = coords(h.beta);
    if (h.r_matrix) doc.r = entries2(*h.r_matrix);
    return doc;
}

std::pair<TensorElement, std::optional<TensorElement>> twistor_elements(const TwistorDocument& doc,
                                                                          const AlgebraPtr& algebra) {
    if (doc.dimension != algebra->dimension()) {
        throw DomainError("twistor '" + doc.name + "' has dimension " + std::to_string(doc.dimension) +
                          " but the structure has dimension " + std::to_string(algebra->dimension()));
    }
    if (doc.field != algebra->field()) {
        throw FieldMismatchError("twistor '" + doc.name + "' is over " + to_string(doc.field) +
                                 " but the structure is over " + to_string(algebra->field()));
    }
    auto element = element2(algebra, doc.element);
    std::optional<TensorElement> inverse;
    if (doc.inverse) inverse = element2(algebra, *doc.inverse);
    if (doc.scale) {
        element *= *doc.scale;
        if (inverse) *inverse *= doc.scale->inverse();
    }
    return {std::move(element), std::move(inverse)};
}

TwistorDocument to_twistor_document(const std::string& name, const TensorElement& element,
                                    const std::optional<TensorElement>& inverse, const std::optional<Scalar>& scale) {
    if (element.arity() != 2) throw DomainError("a twistor document holds an arity-2 element");
    TwistorDocument doc;
    doc.name = name;
    doc.field = element.algebra()->field();
    doc.dimension = element.algebra()->dimension();
    doc.element = entries2(element);
    if (inverse) doc.inverse = entries2(*inverse);
    doc.scale = scale;
    return doc;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw IoError("error writing '" + path.string() + "'");
}

QhsaStructure load_structure(const std::filesystem::path& path) {
    return to_structure(parse_structure(read_text_file(path)));
}

TwistorDocument load_twistor(const std::filesystem::path& path) {
    return parse_twistor(read_text_file(path));
}

} // namespace qhsa
