#include "tropknap/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace tropknap {

using nlohmann::json;

Integer parse_decimal(std::string_view text)
{
    if (text.empty() ||
        !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError("'" + std::string(text) + "' is not a decimal integer");
    }
    return Integer(std::string(text));
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ParseError(where + ": " + what);
}

std::string line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte is one past the offending character.
        fail(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
    }
}

Integer integer_at(const json& j, const std::string& where)
{
    if (!j.is_string()) fail(where, "expected a decimal integer string");
    try {
        return parse_decimal(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(where, e.what());
    }
}

json matrix_to_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, Semiring s, std::size_t k, const std::string& where)
{
    if (!j.is_array() || j.size() != k) fail(where, "expected an array of " + std::to_string(k) + " rows");
    std::vector<Integer> entries;
    entries.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::string row_where = where + "/" + std::to_string(i);
        const json& row = j[i];
        if (!row.is_array() || row.size() != k) {
            fail(row_where, "expected a row of " + std::to_string(k) + " entries");
        }
        for (std::size_t c = 0; c < k; ++c) {
            entries.push_back(integer_at(row[c], row_where + "/" + std::to_string(c)));
        }
    }
    try {
        return Matrix(s, k, std::move(entries));
    } catch (const DomainError& e) {
        fail(where, e.what());
    }
}

}  // namespace

std::string serialize_instance(const ProblemInstance& instance)
{
    json witnesses = json::array();
    for (const auto& w : instance.witnesses()) witnesses.push_back(matrix_to_json(w));
    json doc;
    doc["semiring"] = std::string(to_string(instance.semiring()));
    doc["k"] = instance.dim();
    doc["witnesses"] = std::move(witnesses);
    doc["target"] = matrix_to_json(instance.target());
    return doc.dump(2) + "\n";
}

ProblemInstance parse_instance(std::string_view text)
{
    const json doc = parse_json(text);
    if (!doc.is_object()) fail("/", "expected a JSON object");
    for (const char* field : {"semiring", "k", "witnesses", "target"}) {
        if (!doc.contains(field)) fail("/", std::string("missing field '") + field + "'");
    }
    if (!doc["semiring"].is_string()) fail("/semiring", "expected a string");
    Semiring s;
    try {
        s = parse_semiring(doc["semiring"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail("/semiring", e.what());
    }
    if (!doc["k"].is_number_unsigned() || doc["k"].get<std::size_t>() == 0) {
        fail("/k", "expected a positive integer");
    }
    const std::size_t k = doc["k"].get<std::size_t>();
    const json& ws = doc["witnesses"];
    if (!ws.is_array()) fail("/witnesses", "expected an array of matrices");
    std::vector<Matrix> witnesses;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        witnesses.push_back(matrix_from_json(ws[i], s, k, "/witnesses/" + std::to_string(i)));
    }
    Matrix target = matrix_from_json(doc["target"], s, k, "/target");
    return ProblemInstance(s, k, std::move(witnesses), std::move(target));
}

std::string serialize_certificate(const Certificate& cert)
{
    json arr = json::array();
    for (const auto& x : cert.exponents) arr.push_back(x.str());
    return arr.dump() + "\n";
}

Certificate parse_certificate(std::string_view text)
{
    const json doc = parse_json(text);
    if (!doc.is_array()) fail("/", "expected an array of decimal integer strings");
    Certificate cert;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        cert.exponents.push_back(integer_at(doc[i], "/" + std::to_string(i)));
    }
    return cert;
}

namespace {

struct KeyedLine {
    std::size_t number;
    std::string key;
    std::string value;
};

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<KeyedLine> keyed_lines(std::string_view text)
{
    std::vector<KeyedLine> out;
    std::istringstream in{std::string(text)};
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        const std::string body = trim(line.substr(0, line.find('#')));
        if (body.empty()) continue;
        const auto colon = body.find(':');
        if (colon == std::string::npos) {
            fail("line " + std::to_string(number), "expected 'key: value'");
        }
        out.push_back({number, trim(body.substr(0, colon)), trim(body.substr(colon + 1))});
    }
    return out;
}

std::vector<Integer> integers(const KeyedLine& line)
{
    std::istringstream in(line.value);
    std::vector<Integer> out;
    std::string token;
    while (in >> token) {
        try {
            out.push_back(parse_decimal(token));
        } catch (const ParseError& e) {
            fail("line " + std::to_string(line.number), e.what());
        }
    }
    return out;
}

std::string where(const KeyedLine& line) { return "line " + std::to_string(line.number); }

}  // namespace

std::string serialize_scalar(const ScalarInstance& scalar)
{
    std::ostringstream os;
    os << "op: " << to_string(scalar.op) << "\nitems:";
    for (const auto& w : scalar.items) os << ' ' << w;
    os << "\ntarget: " << scalar.target << '\n';
    return os.str();
}

ScalarInstance parse_scalar(std::string_view text)
{
    ScalarInstance out;
    bool have_target = false;
    bool have_items = false;
    for (const auto& line : keyed_lines(text)) {
        if (line.key == "op") {
            try {
                out.op = parse_scalar_op(line.value);
            } catch (const std::invalid_argument& e) {
                fail(where(line), e.what());
            }
        } else if (line.key == "items") {
            for (auto& v : integers(line)) out.items.push_back(std::move(v));
            have_items = true;
        } else if (line.key == "target") {
            const auto vals = integers(line);
            if (vals.size() != 1) fail(where(line), "target needs exactly one integer");
            if (have_target) fail(where(line), "duplicate target");
            out.target = vals[0];
            have_target = true;
        } else {
            fail(where(line), "unknown key '" + line.key + "'");
        }
    }
    if (!have_items) fail("scalar input", "missing 'items:' line");
    if (!have_target) fail("scalar input", "missing 'target:' line");
    const Integer low = out.op == ScalarOp::Add ? 0 : 1;
    for (const auto& w : out.items) {
        if (w < low) fail("items", "item " + w.str() + " outside the domain of " + std::string(to_string(out.op)));
    }
    if (out.target < low) fail("target", "outside the domain of " + std::string(to_string(out.op)));
    return out;
}

std::string serialize_x3c(const X3CInstance& x3c)
{
    std::ostringstream os;
    os << "ground: " << x3c.ground_size() << '\n';
    for (const auto& t : x3c.triples()) os << "triples: " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return os.str();
}

X3CInstance parse_x3c(std::string_view text)
{
    std::optional<std::size_t> ground;
    std::vector<X3CInstance::Triple> triples;
    for (const auto& line : keyed_lines(text)) {
        if (line.key == "ground") {
            const auto vals = integers(line);
            if (vals.size() != 1) fail(where(line), "ground needs exactly one integer");
            ground = vals[0].convert_to<std::size_t>();
        } else if (line.key == "triples") {
            std::string groups = line.value;
            std::replace(groups.begin(), groups.end(), ';', ',');
            std::istringstream in(groups);
            std::string group;
            while (std::getline(in, group, ',')) {
                if (trim(group).empty()) continue;
                const auto vals = integers(KeyedLine{line.number, {}, group});
                if (vals.size() != 3) fail(where(line), "each triple needs exactly 3 members");
                triples.push_back({vals[0].convert_to<std::size_t>(), vals[1].convert_to<std::size_t>(),
                                   vals[2].convert_to<std::size_t>()});
            }
        } else {
            fail(where(line), "unknown key '" + line.key + "'");
        }
    }
    if (!ground) fail("x3c input", "missing 'ground:' line");
    try {
        return X3CInstance(*ground, std::move(triples));
    } catch (const std::invalid_argument& e) {
        fail("x3c input", e.what());
    }
}

}  // namespace tropknap
