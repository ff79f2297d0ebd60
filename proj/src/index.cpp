#include "mzv/index.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "mzv/errors.hpp"

namespace mzv {

int weight(const Index& k) { return std::accumulate(k.begin(), k.end(), 0); }
int depth(const Index& k) { return static_cast<int>(k.size()); }

int weight(const GmtIndex& k) {
  int w = weight(k.final_block);
  for (const auto& b : k.blocks) w += weight(b);
  return w;
}

int depth(const GmtIndex& k) {
  int d = depth(k.final_block);
  for (const auto& b : k.blocks) d += depth(b);
  return d;
}

bool admissible(const Index& k) {
  if (k.empty()) return false;
  for (int e : k)
    if (e < 1) return false;
  return k.back() >= 2;
}

Index shift(const Index& k, End end, int delta, bool allow_zero) {
  if (k.empty()) fail(Errc::domain, "shift: empty index");
  Index out = k;
  int& e = (end == End::First) ? out.front() : out.back();
  e += delta;
  if (e < (allow_zero ? 0 : 1))
    fail(Errc::domain, "shift: entry would drop below " +
                           std::string(allow_zero ? "0" : "1"));
  return out;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  if (total < 0 || parts < 0) fail(Errc::domain, "compositions: negative arg");
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(static_cast<size_t>(parts), 0);
  // Ascending lexicographic: recurse on the first coordinate from 0 upward.
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == parts - 1) {
      cur[static_cast<size_t>(pos)] = rem;
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= rem; ++a) {
      cur[static_cast<size_t>(pos)] = a;
      self(self, pos + 1, rem - a);
    }
  };
  rec(rec, 0, total);
  return out;
}

BigInt b_coefficient(const Index& k, const std::vector<int>& j) {
  if (k.size() != j.size())
    fail(Errc::domain, "b_coefficient: length mismatch");
  BigInt b = 1;
  for (size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1 || j[i] < 0) fail(Errc::domain, "b_coefficient: bad entry");
    b *= binomial(k[i] + j[i] - 1, j[i]);
  }
  return b;
}

Index dual_index(const Index& k) {
  if (!admissible(k)) fail(Errc::domain, "dual: index must be admissible");
  return word_to_index(dual_word(index_to_word(k)));
}

std::vector<std::pair<Index, std::int64_t>> shuffle_indices(const Index& a,
                                                            const Index& b) {
  auto words = shuffle_words(index_to_word(a), index_to_word(b));
  std::map<Index, std::int64_t> acc;
  for (const auto& [w, c] : words) acc[word_to_index(w)] += c;
  return {acc.begin(), acc.end()};
}

ItoCoeff ito_coefficients(const std::vector<int>& j, const Index& k) {
  if (j.size() != k.size())
    fail(Errc::domain, "ito_coefficients: length mismatch");
  ItoCoeff out;
  for (size_t i = 0; i < k.size(); ++i) {
    const int ki = k[i], ji = j[i];
    if (ki < 2) fail(Errc::domain, "ito_coefficients: entries must be >= 2");
    if (ji < 0) fail(Errc::domain, "ito_coefficients: negative exponent");
    if (ji < ki - 1) {
      if (ji % 2 == 1) out.sign = -out.sign;
      out.zeta_factors.push_back(ki - ji);
      out.lis.emplace_back(static_cast<size_t>(ji), 1);  // {1}^{j_i}
    } else if (ji == ki - 1) {
      if ((ki - 1) % 2 == 1) out.sign = -out.sign;
      ++out.t_power;
      out.lis.emplace_back(static_cast<size_t>(ki - 1), 1);  // {1}^{k_i-1}
    } else {
      if (2 * ki - 2 - ji < 0)
        fail(Errc::domain, "ito_coefficients: exponent exceeds 2k-2");
      if ((ki - 1) % 2 == 1) out.sign = -out.sign;
      // Word in ascending-variable order (innermost variable first): the
      // u-weighted iterated integral puts the squared linear form at
      // ascending position 2k_i-1-j_i, i.e. {1}^{2k_i-2-j_i}, 2, {1}^{j_i-k_i}.
      Index w(static_cast<size_t>(2 * ki - 2 - ji), 1);
      w.push_back(2);
      w.insert(w.end(), static_cast<size_t>(ji - ki), 1);
      out.lis.push_back(std::move(w));
    }
  }
  return out;
}

// ---- Parsing --------------------------------------------------------------

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      fail(Errc::parse, std::string("expected '") + c + "' at offset " +
                            std::to_string(pos_) + " in index");
  }
  int integer() {
    skip_ws();
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
      fail(Errc::parse, "signed entries are not allowed in indices");
    size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) fail(Errc::parse, "index entry too large");
      ++pos_;
    }
    if (pos_ == start)
      fail(Errc::parse,
           "expected integer at offset " + std::to_string(pos_) + " in index");
    return static_cast<int>(v);
  }
  size_t pos() const { return pos_; }

 private:
  const std::string& s_;
  size_t pos_ = 0;
};

/// item := INT | "{" INT "}" "^" INT ; appends the expansion to `out`.
void parse_item(Cursor& c, Index& out) {
  if (c.accept('{')) {
    int v = c.integer();
    c.expect('}');
    c.expect('^');
    int n = c.integer();
    out.insert(out.end(), static_cast<size_t>(n), v);
  } else {
    out.push_back(c.integer());
  }
}

/// plain := item ("," item)* ; stops at ')' / ';' / end.
Index parse_plain(Cursor& c) {
  Index out;
  parse_item(c, out);
  while (c.accept(',')) parse_item(c, out);
  return out;
}

}  // namespace

ParsedIndex parse_index(const std::string& text) {
  // A ';' at top level (outside parentheses) selects the block form.
  int par = 0;
  bool has_semi = false;
  for (char ch : text) {
    if (ch == '(') ++par;
    else if (ch == ')') --par;
    else if (ch == ';' && par == 0) has_semi = true;
  }
  Cursor c(text);
  ParsedIndex out;
  if (!has_semi) {
    out.plain = parse_plain(c);
    if (!c.eof())
      fail(Errc::parse, "trailing characters at offset " +
                            std::to_string(c.pos()) + " in index");
    return out;
  }
  out.is_gmt = true;
  if (c.peek() != ';') {
    for (;;) {
      if (c.accept('(')) {
        out.gmt.blocks.push_back(parse_plain(c));
        c.expect(')');
      } else {
        Index item;
        parse_item(c, item);
        for (int v : item) out.gmt.blocks.push_back({v});
      }
      if (!c.accept(',')) break;
    }
  }
  c.expect(';');
  if (c.accept('(')) {
    out.gmt.final_block = parse_plain(c);
    c.expect(')');
  } else {
    out.gmt.final_block = parse_plain(c);
  }
  if (!c.eof())
    fail(Errc::parse, "trailing characters at offset " +
                          std::to_string(c.pos()) + " in index");
  if (out.gmt.final_block.empty())
    fail(Errc::parse, "block index needs a nonempty final block");
  return out;
}

std::string format_index(const Index& k) {
  std::ostringstream os;
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) os << ',';
    os << k[i];
  }
  return os.str();
}

std::string format_index(const GmtIndex& k) {
  std::ostringstream os;
  for (size_t i = 0; i < k.blocks.size(); ++i) {
    if (i) os << ',';
    if (k.blocks[i].size() == 1)
      os << k.blocks[i][0];
    else
      os << '(' << format_index(k.blocks[i]) << ')';
  }
  os << ';' << format_index(k.final_block);
  return os.str();
}

}  // namespace mzv
