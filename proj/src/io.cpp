#include "polysum/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polysum {

namespace {

struct Token {
    std::string text;
    int col;  // 1-based start column
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

bool isCommentOrBlank(const std::string& line) {
    for (char ch : line) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '*';
    }
    return true;
}

std::string trimmed(const std::string& line) {
    auto b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = line.find_last_not_of(" \t\r\n");
    return line.substr(b, e - b + 1);
}

}  // namespace

PolyhedronFile parsePolyhedronFile(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) lines.push_back(line);
    }

    std::size_t ln = 0;
    PolyhedronFile file;

    // Representation keyword; anything but comments before it is an error.
    bool haveRep = false;
    for (; ln < lines.size(); ++ln) {
        if (isCommentOrBlank(lines[ln])) continue;
        std::string word = trimmed(lines[ln]);
        if (word == "H-representation") {
            file.rep = Representation::H;
        } else if (word == "V-representation") {
            file.rep = Representation::V;
        } else {
            throw ParseError("expected H-representation or V-representation",
                             static_cast<int>(ln + 1), 1);
        }
        haveRep = true;
        ++ln;
        break;
    }
    if (!haveRep)
        throw ParseError("missing representation keyword",
                         static_cast<int>(lines.size() + 1), 1);

    for (; ln < lines.size() && isCommentOrBlank(lines[ln]); ++ln) {}
    if (ln >= lines.size() || trimmed(lines[ln]) != "begin")
        throw ParseError("expected 'begin'", static_cast<int>(ln + 1), 1);
    ++ln;

    if (ln >= lines.size())
        throw ParseError("missing size line", static_cast<int>(ln + 1), 1);
    auto sizeTokens = tokenize(lines[ln]);
    if (sizeTokens.size() != 3)
        throw ParseError("size line must be 'rows cols numbertype'",
                         static_cast<int>(ln + 1), 1);
    long rowCount = 0, colCount = 0;
    try {
        rowCount = std::stol(sizeTokens[0].text);
        colCount = std::stol(sizeTokens[1].text);
    } catch (const std::exception&) {
        throw ParseError("bad size line", static_cast<int>(ln + 1),
                         sizeTokens[0].col);
    }
    if (rowCount < 1 || colCount < 2)
        throw ParseError("need at least one row and one coordinate column",
                         static_cast<int>(ln + 1), sizeTokens[0].col);
    file.numberType = sizeTokens[2].text;
    if (file.numberType != "integer" && file.numberType != "rational" &&
        file.numberType != "real")
        throw ParseError("unknown number type '" + file.numberType + "'",
                         static_cast<int>(ln + 1), sizeTokens[2].col);
    file.dim = static_cast<std::size_t>(colCount - 1);
    ++ln;

    for (long r = 0; r < rowCount; ++r, ++ln) {
        if (ln >= lines.size())
            throw ParseError("unexpected end of file inside begin/end",
                             static_cast<int>(ln + 1), 1);
        auto tokens = tokenize(lines[ln]);
        if (tokens.size() != static_cast<std::size_t>(colCount))
            throw ParseError("expected " + std::to_string(colCount) +
                                 " entries, found " + std::to_string(tokens.size()),
                             static_cast<int>(ln + 1), 1);
        std::vector<Rational> row;
        row.reserve(colCount);
        for (const auto& tok : tokens) {
            auto q = tryParseRational(tok.text);
            if (!q)
                throw ParseError("bad number '" + tok.text + "'",
                                 static_cast<int>(ln + 1), tok.col);
            row.push_back(*q);
        }
        if (file.rep == Representation::V) {
            if (row[0] == 0)
                throw RayNotSupported("V-row with leading 0 is a ray; polytopes only",
                                      static_cast<int>(ln + 1), tokens[0].col);
            if (row[0] != 1)
                throw ParseError("V-row must start with 1",
                                 static_cast<int>(ln + 1), tokens[0].col);
        }
        file.rows.push_back(std::move(row));
    }

    if (ln >= lines.size() || trimmed(lines[ln]) != "end")
        throw ParseError("expected 'end'", static_cast<int>(ln + 1), 1);
    // Anything after 'end' (options, witness comments) is ignored.
    return file;
}

std::vector<HalfSpace> halfSpacesFromFile(const PolyhedronFile& f) {
    if (f.rep != Representation::H)
        throw std::invalid_argument("not an H-representation file");
    std::vector<HalfSpace> hs;
    hs.reserve(f.rows.size());
    for (const auto& row : f.rows) {
        Vector normal(f.dim);
        for (std::size_t i = 0; i < f.dim; ++i) normal[i] = -row[i + 1];
        hs.emplace_back(std::move(normal), row[0]);
    }
    return hs;
}

std::vector<Vector> pointsFromFile(const PolyhedronFile& f) {
    if (f.rep != Representation::V)
        throw std::invalid_argument("not a V-representation file");
    std::vector<Vector> pts;
    pts.reserve(f.rows.size());
    for (const auto& row : f.rows) {
        Vector v(f.dim);
        for (std::size_t i = 0; i < f.dim; ++i) v[i] = row[i + 1];
        pts.push_back(std::move(v));
    }
    return pts;
}

Polytope polytopeFromFile(const PolyhedronFile& f) {
    if (f.rep == Representation::H)
        return Polytope::fromHalfSpaces(f.dim, halfSpacesFromFile(f));
    return Polytope::fromVertices(f.dim, pointsFromFile(f));
}

std::string writePolyhedronFile(const Polytope& p, Representation rep) {
    std::vector<std::vector<Rational>> rows;
    if (rep == Representation::H) {
        for (const auto& h : p.facets()) {
            std::vector<Rational> row;
            row.reserve(p.dim() + 1);
            row.push_back(h.offset());
            for (std::size_t i = 0; i < p.dim(); ++i) row.push_back(-h.normal()[i]);
            rows.push_back(std::move(row));
        }
    } else {
        for (const auto& v : p.vertices()) {
            std::vector<Rational> row;
            row.reserve(p.dim() + 1);
            row.push_back(Rational(1));
            for (std::size_t i = 0; i < p.dim(); ++i) row.push_back(v[i]);
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end());

    bool allIntegral = true;
    for (const auto& row : rows)
        for (const auto& q : row)
            if (q.get_den() != 1) allIntegral = false;

    std::ostringstream os;
    os << (rep == Representation::H ? "H-representation" : "V-representation") << "\n";
    os << "begin\n";
    os << rows.size() << " " << (p.dim() + 1) << " "
       << (allIntegral ? "integer" : "rational") << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << " ";
            os << str(row[i]);
        }
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

}  // namespace polysum
