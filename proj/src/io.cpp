#include "enumkit/io.hpp"

#include <fstream>
#include <sstream>

#include "enumkit/errors.hpp"

namespace enumkit {
namespace {

std::vector<long long> parse_ints_at(const std::string& line, int line_no);

// Line-oriented reader that remembers the current line number for errors.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line, '\r' stripped. Throws ParseError when the stream ends.
  std::string next_line(const std::string& expected) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    throw ParseError("unexpected end of file, expected " + expected, line_no_ + 1);
  }

  std::vector<long long> next_ints(const std::string& expected) {
    const std::string line = next_line(expected);
    return parse_ints_at(line, line_no_);
  }

  int line_no() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

std::vector<long long> parse_ints_at(const std::string& line, int line_no) {
  std::vector<long long> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + tok + "'", line_no);
    }
  }
  return out;
}

}  // namespace

SetSystem parse_set_system(std::istream& in) {
  LineReader r(in);
  auto header = r.next_ints("header 'n m'");
  if (header.size() != 2 || header[0] < 0 || header[1] < 0)
    throw ParseError("set system header must be 'n m'", r.line_no());
  const uint32_t n = static_cast<uint32_t>(header[0]);
  SetSystem x;
  x.n = n;
  const long long m = header[1];
  for (long long i = 0; i < m; ++i) {
    auto elems = r.next_ints("a set line");
    BitVec s(n);
    for (long long e : elems) {
      if (e < 1 || e > n)
        throw ValidationError("element " + std::to_string(e) + " out of range 1.." +
                              std::to_string(n) + " on line " + std::to_string(r.line_no()));
      s.set(static_cast<uint32_t>(e - 1), true);
    }
    x.sets.push_back(std::move(s));
  }
  return x;
}

DnfFormula parse_dnf(std::istream& in) {
  LineReader r(in);
  std::string header = r.next_line("header 'p dnf n m'");
  std::istringstream hs(header);
  std::string p, kind;
  long long n = -1, m = -1;
  if (!(hs >> p >> kind >> n >> m) || p != "p" || kind != "dnf" || n < 0 || m < 0)
    throw ParseError("dnf header must be 'p dnf n m'", r.line_no());
  std::vector<std::vector<int>> terms;
  for (long long i = 0; i < m; ++i) {
    auto lits = r.next_ints("a term line");
    if (lits.empty() || lits.back() != 0)
      throw ParseError("term line must end with 0", r.line_no());
    lits.pop_back();
    std::vector<int> term;
    for (long long lit : lits) {
      const long long var = lit < 0 ? -lit : lit;
      if (var < 1 || var > n)
        throw ValidationError("literal " + std::to_string(lit) + " out of range on line " +
                              std::to_string(r.line_no()));
      term.push_back(static_cast<int>(lit));
    }
    terms.push_back(std::move(term));
  }
  DnfFormula d = DnfFormula::from_signed(static_cast<uint32_t>(n), terms);
  for (const auto& term : d.terms) {
    std::vector<uint8_t> seen(d.n + 1, 0);
    for (const Literal& lit : term) {
      if (seen[lit.variable])
        throw ValidationError("a term mentions variable " + std::to_string(lit.variable) +
                              " twice");
      seen[lit.variable] = 1;
    }
  }
  return d;
}

Dag parse_dag(std::istream& in) {
  LineReader r(in);
  auto header = r.next_ints("header 'V E s t'");
  if (header.size() != 4 || header[0] < 1 || header[1] < 0)
    throw ParseError("dag header must be 'V E s t'", r.line_no());
  std::vector<std::pair<uint32_t, uint32_t>> arcs;
  for (long long i = 0; i < header[1]; ++i) {
    auto uv = r.next_ints("an arc line 'u v'");
    if (uv.size() != 2) throw ParseError("arc line must be 'u v'", r.line_no());
    if (uv[0] < 1 || uv[1] < 1)
      throw ValidationError("arc endpoints must be positive on line " +
                            std::to_string(r.line_no()));
    arcs.push_back({static_cast<uint32_t>(uv[0]), static_cast<uint32_t>(uv[1])});
  }
  return Dag::make(static_cast<uint32_t>(header[0]), std::move(arcs),
                   static_cast<uint32_t>(header[2]), static_cast<uint32_t>(header[3]));
}

Gf2System parse_gf2(std::istream& in) {
  LineReader r(in);
  auto header = r.next_ints("header 'r n'");
  if (header.size() != 2 || header[0] < 0 || header[1] < 0)
    throw ParseError("gf2 header must be 'r n'", r.line_no());
  const uint32_t rows = static_cast<uint32_t>(header[0]);
  const uint32_t cols = static_cast<uint32_t>(header[1]);
  Gf2System sys;
  sys.rows = rows;
  sys.cols = cols;
  sys.rhs = BitVec(rows);
  for (uint32_t row = 0; row < rows; ++row) {
    std::istringstream ss(r.next_line("a coefficient row"));
    std::string tok;
    std::string bits;
    while (ss >> tok) {
      for (char c : tok) {
        if (c != '0' && c != '1')
          throw ParseError(std::string("expected bits, got '") + tok + "'", r.line_no());
        bits.push_back(c);
      }
    }
    if (bits.size() != cols + 1)
      throw ParseError("row needs " + std::to_string(cols + 1) + " bits, got " +
                       std::to_string(bits.size()), r.line_no());
    sys.row_coeffs.push_back(BitVec::from_string(bits.substr(0, cols)));
    if (bits.back() == '1') sys.rhs.set(row, true);
  }
  return sys;
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'", 0);
  return f;
}

}  // namespace

SetSystem load_set_system(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_set_system(f);
}

DnfFormula load_dnf(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_dnf(f);
}

Dag load_dag(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_dag(f);
}

Gf2System load_gf2(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_gf2(f);
}

}  // namespace enumkit
