#include "mdmat/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace mdmat {

namespace {

// Whitespace-separated token reader that tracks line numbers for messages.
class Tokenizer {
public:
    Tokenizer(std::istream& in, std::string name) : in_(in), name_(std::move(name)) {}

    std::string next(const char* what) {
        std::string tok;
        if (!fetch(tok))
            throw ParseError(name_ + ":" + std::to_string(line_) + ": expected " +
                             std::string(what) + ", found end of input");
        return tok;
    }

    int next_int(const char* what, int lo, int hi) {
        std::string tok = next(what);
        std::size_t pos = 0;
        long long v = 0;
        bool neg = pos < tok.size() && tok[pos] == '-';
        if (neg)
            ++pos;
        if (pos >= tok.size())
            bad(what, tok);
        for (; pos < tok.size(); ++pos) {
            if (tok[pos] < '0' || tok[pos] > '9')
                bad(what, tok);
            v = v * 10 + (tok[pos] - '0');
            if (v > 1'000'000'000)
                bad(what, tok);
        }
        if (neg)
            v = -v;
        if (v < lo || v > hi)
            throw ParseError(where() + ": " + std::string(what) + " " + tok + " out of range " +
                             std::to_string(lo) + ".." + std::to_string(hi));
        return static_cast<int>(v);
    }

    Rational next_rational() {
        std::string tok = next("rational literal");
        try {
            return Rational::parse(tok);
        } catch (const ParseError& e) {
            throw ParseError(where() + ": " + e.what());
        } catch (const ValidationError& e) {
            throw ParseError(where() + ": " + e.what());
        }
    }

    void expect(const char* literal) {
        std::string tok = next(literal);
        if (tok != literal)
            throw ParseError(where() + ": expected '" + std::string(literal) + "', found '" +
                             tok + "'");
    }

    void expect_end() {
        std::string tok;
        if (fetch(tok))
            throw ParseError(where() + ": trailing content '" + tok + "'");
    }

    std::string where() const { return name_ + ":" + std::to_string(token_line_); }

private:
    [[noreturn]] void bad(const char* what, const std::string& tok) {
        throw ParseError(where() + ": bad " + std::string(what) + " '" + tok + "'");
    }

    bool fetch(std::string& tok) {
        tok.clear();
        int c;
        while ((c = in_.get()) != EOF) {
            if (!std::isspace(static_cast<unsigned char>(c)))
                break;
            if (c == '\n')
                ++line_;
        }
        if (c == EOF) {
            token_line_ = line_;
            return false;
        }
        token_line_ = line_;
        tok.push_back(static_cast<char>(c));
        while ((c = in_.get()) != EOF && !std::isspace(static_cast<unsigned char>(c)))
            tok.push_back(static_cast<char>(c));
        if (c == '\n')
            ++line_;
        return true;
    }

    std::istream& in_;
    std::string name_;
    int line_ = 1;       // current scan position
    int token_line_ = 1; // line where the last token started
};

constexpr int kMaxDim = 16;
constexpr int kMaxExtent = 4096;
constexpr std::size_t kMaxEntries = 16'000'000;

std::size_t checked_size(std::size_t acc, int factor, const Tokenizer& tok) {
    acc *= static_cast<std::size_t>(factor);
    if (acc > kMaxEntries)
        throw ParseError(tok.where() + ": object too large (over " +
                         std::to_string(kMaxEntries) + " entries)");
    return acc;
}

} // namespace

Tensor parse_pmat(std::istream& in, const std::string& name) {
    Tokenizer tok(in, name);
    tok.expect("pmat");
    tok.expect("v1");
    int d = tok.next_int("dimension", 0, kMaxDim);
    std::vector<int> extents(static_cast<std::size_t>(d));
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) {
        extents[static_cast<std::size_t>(i)] = tok.next_int("extent", 1, kMaxExtent);
        total = checked_size(total, extents[static_cast<std::size_t>(i)], tok);
    }
    Shape shape(extents);
    std::vector<Rational> entries(shape.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        entries[i] = tok.next_rational();
    tok.expect_end();
    return Tensor(std::move(shape), std::move(entries));
}

LatinHypercube parse_latin(std::istream& in, const std::string& name) {
    Tokenizer tok(in, name);
    tok.expect("latin");
    tok.expect("v1");
    int d = tok.next_int("dimension", 1, kMaxDim);
    int n = tok.next_int("order", 1, kMaxExtent);
    std::size_t total = 1;
    for (int i = 0; i < d; ++i)
        total = checked_size(total, n, tok);
    std::vector<int> cells(total);
    for (std::size_t i = 0; i < cells.size(); ++i)
        cells[i] = tok.next_int("symbol", 1, n);
    tok.expect_end();
    return make_latin(d, n, std::move(cells));
}

OrthogonalArray parse_oa(std::istream& in, const std::string& name) {
    Tokenizer tok(in, name);
    tok.expect("oa");
    tok.expect("v1");
    int t = tok.next_int("strength", 1, kMaxDim);
    int n = tok.next_int("order", 1, kMaxExtent);
    int k = tok.next_int("row length", 1, kMaxDim);
    int lambda = tok.next_int("lambda", 1, 1'000'000);
    std::size_t count = static_cast<std::size_t>(lambda);
    for (int i = 0; i < t; ++i)
        count = checked_size(count, n, tok);
    checked_size(count, k, tok);
    std::vector<std::vector<int>> rows(count, std::vector<int>(static_cast<std::size_t>(k)));
    for (auto& row : rows)
        for (auto& v : row)
            v = tok.next_int("symbol", 1, n);
    tok.expect_end();
    OrthogonalArray r = make_oa(t, n, k, lambda, std::move(rows));
    oa_to_tensor(r); // rejects arrays that fail the counting property
    return r;
}

ParsedObject parse_stream(std::istream& in, const std::string& name) {
    std::stringstream buffered;
    buffered << in.rdbuf();
    std::string head;
    buffered >> head;
    buffered.clear();
    buffered.seekg(0);
    if (head == "pmat")
        return parse_pmat(buffered, name);
    if (head == "latin")
        return parse_latin(buffered, name);
    if (head == "oa")
        return parse_oa(buffered, name);
    throw ParseError(name + ":1: unknown format header '" + head + "'");
}

ParsedObject parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(path + ": cannot open file");
    return parse_stream(in, path);
}

std::string to_pmat(const Tensor& t) {
    std::string out = "pmat v1\n" + std::to_string(t.dim()) + "\n";
    for (int a = 1; a <= t.dim(); ++a) {
        if (a > 1)
            out += ' ';
        out += std::to_string(t.extent(a));
    }
    out += '\n';
    // One line per run of the last axis.
    std::size_t row = t.dim() == 0 ? 1 : static_cast<std::size_t>(t.extent(t.dim()));
    for (std::size_t i = 0; i < t.size(); ++i) {
        out += t.flat(i).str();
        out += (i % row == row - 1) ? '\n' : ' ';
    }
    return out;
}

std::string to_latin(const LatinHypercube& q) {
    std::string out = "latin v1\n" + std::to_string(q.d) + " " + std::to_string(q.n) + "\n";
    std::size_t row = static_cast<std::size_t>(q.n);
    for (std::size_t i = 0; i < q.cells.size(); ++i) {
        out += std::to_string(q.cells[i]);
        out += (i % row == row - 1) ? '\n' : ' ';
    }
    return out;
}

std::string to_oa(const OrthogonalArray& r) {
    std::string out = "oa v1\n" + std::to_string(r.t) + " " + std::to_string(r.n) + " " +
                      std::to_string(r.k) + " " + std::to_string(r.lambda) + "\n";
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0)
                out += ' ';
            out += std::to_string(row[i]);
        }
        out += '\n';
    }
    return out;
}

const char* parsed_kind_name(const ParsedObject& obj) {
    if (std::holds_alternative<Tensor>(obj))
        return "pmat";
    if (std::holds_alternative<LatinHypercube>(obj))
        return "latin";
    return "oa";
}

} // namespace mdmat
