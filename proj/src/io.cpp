#include "ybe/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ybe {

namespace {

[[noreturn]] void parse_fail(const std::string& what, std::size_t line, std::size_t col) {
    throw Error(Errc::ParseError,
                what + " at line " + std::to_string(line) + ", column " + std::to_string(col), {line, col});
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Token {
    std::string_view text;
    std::size_t col;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
    std::size_t b = 0;
    while (b < s.size() && is_space(s[b])) ++b;
    std::size_t e = s.size();
    while (e > b && is_space(s[e - 1])) --e;
    if (lead) *lead = b;
    return s.substr(b, e - b);
}

// Unsigned integer in 0b / 0x / decimal notation.
std::optional<std::uint64_t> parse_number(std::string_view s) {
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        base = 16;
        s.remove_prefix(2);
    } else if (s.size() > 2 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) {
        base = 2;
        s.remove_prefix(2);
    }
    if (s.empty()) return std::nullopt;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, base);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

Element element_at(const Field& field, std::string_view text, std::size_t line, std::size_t col) {
    std::size_t lead = 0;
    const std::string_view t = trim(text, &lead);
    const auto value = parse_number(t);
    if (!value) parse_fail("malformed element literal '" + std::string(t) + "'", line, col + lead);
    if (*value >= field.order())
        parse_fail("element " + std::string(t) + " outside " + field.literal(), line, col + lead);
    return field.element(*value);
}

Field field_at(std::string_view text, std::size_t line, std::size_t col) {
    std::size_t lead = 0;
    const std::string_view t = trim(text, &lead);
    col += lead;
    if (t.size() < 5 || t.substr(0, 3) != "gf(" || t.back() != ')') parse_fail("expected gf(...)", line, col);
    const std::string_view body = t.substr(3, t.size() - 4);
    const std::size_t semi = body.find(';');
    const std::string_view power = body.substr(0, semi);
    const std::size_t caret = power.find('^');
    const auto p = parse_number(trim(power.substr(0, caret)));
    if (!p) parse_fail("malformed characteristic", line, col + 3);
    std::uint64_t m = 1;
    if (caret != std::string_view::npos) {
        const auto parsed = parse_number(trim(power.substr(caret + 1)));
        if (!parsed || *parsed == 0) parse_fail("malformed degree", line, col + 4 + caret);
        m = *parsed;
    }
    std::optional<std::uint64_t> modulus;
    if (semi != std::string_view::npos) {
        modulus = parse_number(trim(body.substr(semi + 1)));
        if (!modulus) parse_fail("malformed modulus", line, col + 4 + semi);
    }
    if (*p > 65536 || m > 16) throw Error(Errc::FieldTooLarge, "field order exceeds 65536");
    return Field::make(static_cast<std::uint32_t>(*p), static_cast<std::uint32_t>(m), modulus);
}

}  // namespace

Field parse_field(std::string_view text) { return field_at(text, 1, 1); }

Element parse_element(const Field& field, std::string_view text) { return element_at(field, text, 1, 1); }

Tensor2 parse_tensor(const Field& field, std::string_view text, std::optional<std::size_t> dim) {
    std::vector<Code> codes;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        codes.push_back(element_at(field, item, 1, start + 1).code());
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    std::size_t n = dim.value_or(static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(codes.size())))));
    if (n == 0 || n * n != codes.size())
        throw Error(Errc::DimensionMismatch,
                    "tensor literal has " + std::to_string(codes.size()) + " entries, not a square of the dimension");
    return Tensor2::from_codes(field, n, std::move(codes));
}

std::string tensor_literal(const Tensor2& r) {
    std::string out;
    for (std::size_t i = 0; i < r.codes().size(); ++i) {
        if (i) out += ',';
        out += Element(r.field(), r.codes()[i]).literal();
    }
    return out;
}

std::vector<std::string> split_field_list(std::string_view text) {
    std::vector<std::string> out;
    int depth = 0;
    std::string current;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.emplace_back(trim(current));
            current.clear();
            continue;
        }
        current += c;
    }
    if (!trim(current).empty() || !out.empty()) out.emplace_back(trim(current));
    return out;
}

AlgebraDefinition parse_algebra(std::string_view text) {
    std::optional<Field> field;
    std::optional<std::size_t> dim;
    std::optional<StructureConstants> sc;
    std::optional<ProductKind> kind;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        const Token& head = tokens[0];
        if (head.text == "field") {
            if (field) parse_fail("field declared twice", line_no, head.col);
            if (tokens.size() != 2) parse_fail("expected 'field LITERAL'", line_no, head.col);
            field = field_at(tokens[1].text, line_no, tokens[1].col);
        } else if (head.text == "dim") {
            if (dim) parse_fail("dim declared twice", line_no, head.col);
            if (tokens.size() != 2) parse_fail("expected 'dim N'", line_no, head.col);
            const auto n = parse_number(tokens[1].text);
            if (!n || *n == 0 || *n > 64) parse_fail("dimension must be an integer in 1..64", line_no, tokens[1].col);
            dim = static_cast<std::size_t>(*n);
        } else if (head.text == "bracket" || head.text == "product") {
            const ProductKind pk = head.text == "bracket" ? ProductKind::bracket : ProductKind::product;
            if (kind && *kind != pk) parse_fail("cannot mix 'bracket' and 'product'", line_no, head.col);
            kind = pk;
            if (!field || !dim) parse_fail("'field' and 'dim' must precede structure constants", line_no, head.col);
            if (!sc) sc.emplace(*field, *dim);
            if (tokens.size() < 5 || tokens[3].text != "->")
                parse_fail("expected '" + std::string(head.text) + " i j -> k:c ...'", line_no, head.col);
            auto index = [&](const Token& tok) {
                const auto v = parse_number(tok.text);
                if (!v || *v < 1 || *v > *dim) parse_fail("basis index must be in 1.." + std::to_string(*dim), line_no, tok.col);
                return static_cast<std::size_t>(*v - 1);
            };
            const std::size_t i = index(tokens[1]);
            const std::size_t j = index(tokens[2]);
            for (std::size_t t = 4; t < tokens.size(); ++t) {
                const std::string_view term = tokens[t].text;
                const std::size_t colon = term.find(':');
                if (colon == std::string_view::npos) parse_fail("expected k:c", line_no, tokens[t].col);
                const std::size_t k = index({term.substr(0, colon), tokens[t].col});
                const Element c = element_at(*field, term.substr(colon + 1), line_no, tokens[t].col + colon + 1);
                sc->set(i, j, k, c);
                if (pk == ProductKind::bracket && i != j) sc->set(j, i, k, -c);
            }
        } else {
            parse_fail("unknown keyword '" + std::string(head.text) + "'", line_no, head.col);
        }
    }
    if (!field) parse_fail("missing 'field' declaration", line_no, 1);
    if (!dim) parse_fail("missing 'dim' declaration", line_no, 1);
    if (!sc) sc.emplace(*field, *dim);
    return {*field, *dim, kind.value_or(ProductKind::bracket), std::move(*sc)};
}

AlgebraDefinition load_algebra_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

LieAlgebra to_lie(const AlgebraDefinition& def, std::string label) {
    if (def.kind != ProductKind::bracket) throw Error(Errc::InvalidArgument, "definition uses 'product', not 'bracket'");
    return lie_validate(def.constants, std::move(label));
}

AssocAlgebra to_assoc(const AlgebraDefinition& def, std::string label) {
    if (def.kind != ProductKind::product) throw Error(Errc::InvalidArgument, "definition uses 'bracket', not 'product'");
    return assoc_validate(def.constants, std::move(label));
}

}  // namespace ybe
