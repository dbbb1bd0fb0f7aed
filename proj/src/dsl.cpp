#include "grpx/dsl.hpp"

#include <cctype>
#include <deque>
#include <sstream>

#include "grpx/corpus.hpp"
#include "grpx/error.hpp"

namespace grpx {

bool operator==(const ConstructionSpec& a, const ConstructionSpec& b) {
  if (a.kind != b.kind) return false;
  auto same = [](const SpecPtr& x, const SpecPtr& y) { return (!x && !y) || (x && y && *x == *y); };
  switch (a.kind) {
    case ConstructionSpec::Kind::Cyclic: return a.n == b.n;
    case ConstructionSpec::Kind::Direct: return same(a.left, b.left) && same(a.right, b.right);
    case ConstructionSpec::Kind::Semidirect:
      return same(a.left, b.left) && same(a.right, b.right) && a.action == b.action;
    case ConstructionSpec::Kind::Pc:
      return a.pc.prime == b.pc.prime && a.pc.names == b.pc.names && a.pc.power == b.pc.power &&
             a.pc.comm == b.pc.comm;
    case ConstructionSpec::Kind::Perm: return a.n == b.n && a.perms == b.perms;
    case ConstructionSpec::Kind::Named: return a.name == b.name;
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ConstructionSpec parse() {
    ConstructionSpec e = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                            ": expected " + expected + ", found " + found);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("integer");
    }
    try {
      return std::stoll(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer in range");
    }
  }
  std::uint64_t positive() {
    const std::size_t at = pos_;
    long long v = integer();
    if (v <= 0) {
      pos_ = at;
      skip_ws();
      fail("positive integer");
    }
    return static_cast<std::uint64_t>(v);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    }
    if (pos_ == start) fail("name");
    return s_.substr(start, pos_ - start);
  }

  // "x" as a product operator must stand alone.
  bool accept_times() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == 'x' &&
        (pos_ + 1 == s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '_'))) {
      ++pos_;
      return true;
    }
    return false;
  }

  ConstructionSpec expr() {
    ConstructionSpec left = term();
    while (accept_times()) {
      ConstructionSpec right = term();
      ConstructionSpec d;
      d.kind = ConstructionSpec::Kind::Direct;
      d.left = std::make_shared<ConstructionSpec>(std::move(left));
      d.right = std::make_shared<ConstructionSpec>(std::move(right));
      left = std::move(d);
    }
    return left;
  }

  ConstructionSpec term() {
    if (accept('(')) {
      ConstructionSpec e = expr();
      expect(')');
      return e;
    }
    skip_ws();
    if (pos_ >= s_.size()) fail("group term");
    const std::size_t at = pos_;
    std::string word = ident();
    ConstructionSpec t;
    if (word == "C" && peek('(')) {
      expect('(');
      t.kind = ConstructionSpec::Kind::Cyclic;
      t.n = positive();
      expect(')');
    } else if (word == "SD" && peek('(')) {
      expect('(');
      t.kind = ConstructionSpec::Kind::Semidirect;
      t.left = std::make_shared<ConstructionSpec>(expr());
      expect(',');
      t.right = std::make_shared<ConstructionSpec>(expr());
      expect(',');
      t.action = action();
      expect(')');
    } else if (word == "PC" && peek('{')) {
      expect('{');
      t.kind = ConstructionSpec::Kind::Pc;
      t.pc = pc_block();
      expect('}');
    } else if (word == "Perm" && peek('(')) {
      expect('(');
      t.kind = ConstructionSpec::Kind::Perm;
      t.n = positive();
      expect(';');
      do t.perms.push_back(cycles(t.n));
      while (accept(','));
      expect(')');
    } else {
      if (!find_corpus_entry(word)) {
        pos_ = at;
        throw Error(ErrorCode::UnknownName, "unknown group name '" + word + "'");
      }
      t.kind = ConstructionSpec::Kind::Named;
      t.name = word;
    }
    return t;
  }

  Permutation cycles(std::uint64_t degree) {
    Permutation p(degree);
    for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
    std::vector<char> used(degree, 0);
    if (!peek('(')) fail("'('");
    while (accept('(')) {
      std::vector<std::uint32_t> c;
      while (!peek(')')) {
        const std::size_t at = pos_;
        long long v = integer();
        if (v < 0 || static_cast<std::uint64_t>(v) >= degree || used[v]) {
          pos_ = at;
          skip_ws();
          fail("distinct point below the degree");
        }
        used[v] = 1;
        c.push_back(static_cast<std::uint32_t>(v));
      }
      expect(')');
      for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
    }
    return p;
  }

  ActionSpec action() {
    ActionSpec a;
    std::string word = ident();
    if (word == "pow") {
      expect('(');
      a.kind = ActionSpec::Kind::Power;
      a.power = integer();
      expect(')');
    } else if (word == "mat") {
      expect('[');
      a.kind = ActionSpec::Kind::Matrix;
      a.matrix.emplace_back();
      while (true) {
        if (accept(']')) break;
        if (accept(';')) {
          a.matrix.emplace_back();
          continue;
        }
        a.matrix.back().push_back(integer());
      }
      for (const auto& row : a.matrix)
        if (row.size() != a.matrix.size())
          throw Error(ErrorCode::DimensionMismatch, "action matrix must be square");
    } else if (word == "imgs") {
      expect('{');
      a.kind = ActionSpec::Kind::Images;
      do a.images.push_back(image_word());
      while (accept(','));
      expect('}');
    } else {
      fail("pow(, mat[ or imgs{");
    }
    return a;
  }

  // A word like g1*g2^-1 or 1, kept in normalized text form.
  std::string image_word() {
    skip_ws();
    if (accept('1')) return "1";
    std::string out;
    do {
      skip_ws();
      if (!accept('g')) fail("generator g<k>");
      std::uint64_t k = positive();
      std::string factor = "g" + std::to_string(k);
      if (accept('^')) factor += "^" + std::to_string(integer());
      out += (out.empty() ? "" : "*") + factor;
    } while (accept('*'));
    return out;
  }

  PcPresentation pc_block() {
    PcPresentation pc;
    const std::size_t at = pos_;
    long long p = integer();
    if (p < 2) {
      pos_ = at;
      skip_ws();
      fail("prime");
    }
    pc.prime = static_cast<std::uint32_t>(p);
    expect(';');
    do pc.names.push_back(ident());
    while (accept(','));
    auto index = [&](const std::string& nm) -> std::uint32_t {
      for (std::uint32_t i = 0; i < pc.names.size(); ++i)
        if (pc.names[i] == nm) return i;
      throw Error(ErrorCode::SyntaxError, "unknown pc generator '" + nm + "'");
    };
    if (accept(';')) {
      if (!peek('}')) do {
          if (accept('[')) {
            const std::uint32_t j = index(ident());
            expect(',');
            const std::uint32_t i = index(ident());
            expect(']');
            if (j <= i) throw Error(ErrorCode::SyntaxError, "commutator [x,y] needs x later than y");
            expect('=');
            pc.comm[{j, i}] = pc_word(index);
          } else {
            const std::uint32_t i = index(ident());
            expect('^');
            const std::size_t e_at = pos_;
            if (integer() != p) {
              pos_ = e_at;
              skip_ws();
              fail("exponent equal to the prime");
            }
            expect('=');
            pc.power[i] = pc_word(index);
          }
        } while (accept(','));
    }
    return pc;
  }

  template <class Index>
  PcWord pc_word(Index&& index) {
    skip_ws();
    if (accept('1')) return {};
    PcWord w;
    do {
      const std::uint32_t g = index(ident());
      std::uint32_t e = 1;
      if (accept('^')) e = static_cast<std::uint32_t>(positive());
      w.emplace_back(g, e);
    } while (accept('*'));
    return w;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string word_text(const PcWord& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (auto [g, e] : w) {
    if (!out.empty()) out += "*";
    out += names[g];
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string perm_text(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    for (std::uint32_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (j != i) out += " ";
      out += std::to_string(j);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

void print(const ConstructionSpec& s, std::ostringstream& out) {
  using K = ConstructionSpec::Kind;
  switch (s.kind) {
    case K::Cyclic: out << "C(" << s.n << ")"; break;
    case K::Direct:
      print(*s.left, out);
      out << " x ";
      if (s.right->kind == K::Direct) {
        out << "(";
        print(*s.right, out);
        out << ")";
      } else {
        print(*s.right, out);
      }
      break;
    case K::Semidirect:
      out << "SD(";
      print(*s.left, out);
      out << ", ";
      print(*s.right, out);
      out << ", ";
      switch (s.action.kind) {
        case ActionSpec::Kind::Power: out << "pow(" << s.action.power << ")"; break;
        case ActionSpec::Kind::Matrix:
          out << "mat[";
          for (std::size_t r = 0; r < s.action.matrix.size(); ++r) {
            if (r) out << "; ";
            for (std::size_t c = 0; c < s.action.matrix[r].size(); ++c) out << (c ? " " : "") << s.action.matrix[r][c];
          }
          out << "]";
          break;
        case ActionSpec::Kind::Images:
          out << "imgs{";
          for (std::size_t i = 0; i < s.action.images.size(); ++i) out << (i ? ", " : "") << s.action.images[i];
          out << "}";
          break;
      }
      out << ")";
      break;
    case K::Pc: {
      out << "PC{" << s.pc.prime << "; ";
      for (std::size_t i = 0; i < s.pc.names.size(); ++i) out << (i ? "," : "") << s.pc.names[i];
      std::vector<std::string> rels;
      for (const auto& [i, w] : s.pc.power)
        rels.push_back(s.pc.names[i] + "^" + std::to_string(s.pc.prime) + "=" + word_text(w, s.pc.names));
      for (const auto& [ji, w] : s.pc.comm)
        rels.push_back("[" + s.pc.names[ji.first] + "," + s.pc.names[ji.second] + "]=" + word_text(w, s.pc.names));
      if (!rels.empty()) {
        out << "; ";
        for (std::size_t i = 0; i < rels.size(); ++i) out << (i ? ", " : "") << rels[i];
      }
      out << "}";
      break;
    }
    case K::Perm:
      out << "Perm(" << s.n << "; ";
      for (std::size_t i = 0; i < s.perms.size(); ++i) out << (i ? ", " : "") << perm_text(s.perms[i]);
      out << ")";
      break;
    case K::Named: out << s.name; break;
  }
}

// In-order leaves of a product of cyclic groups, or empty if the tree has
// another node kind.
void cyclic_leaves(const ConstructionSpec& s, std::vector<std::uint64_t>& out, bool& ok) {
  using K = ConstructionSpec::Kind;
  if (s.kind == K::Cyclic) {
    out.push_back(s.n);
  } else if (s.kind == K::Direct) {
    cyclic_leaves(*s.left, out, ok);
    cyclic_leaves(*s.right, out, ok);
  } else if (s.kind == K::Named) {
    const auto* e = find_corpus_entry(s.name);
    cyclic_leaves(parse_construction(e->spec), out, ok);
  } else {
    ok = false;
  }
}

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

std::vector<Elem> matrix_action(const ConstructionSpec& normal, const FiniteGroup& n, const ActionSpec& a) {
  std::vector<std::uint64_t> leaves;
  bool ok = true;
  cyclic_leaves(normal, leaves, ok);
  if (!ok || leaves.empty())
    throw Error(ErrorCode::InvalidInput, "matrix actions need a normal subgroup written as a product of C(m) factors");
  for (auto m : leaves)
    if (m != leaves.front())
      throw Error(ErrorCode::InvalidInput, "matrix actions need a homocyclic normal subgroup");
  const std::size_t k = leaves.size();
  const auto m = static_cast<long long>(leaves.front());
  if (a.matrix.size() != k)
    throw Error(ErrorCode::DimensionMismatch, "action matrix is " + std::to_string(a.matrix.size()) + "x" +
                                                  std::to_string(a.matrix.size()) + " but the normal subgroup has " +
                                                  std::to_string(k) + " basis vectors");
  std::vector<Elem> img(n.order());
  std::vector<long long> v(k), w(k);
  for (Elem x = 0; x < n.order(); ++x) {
    Elem r = x;
    for (std::size_t i = k; i-- > 0;) {
      v[i] = r % m;
      r /= static_cast<Elem>(m);
    }
    Elem y = 0;
    for (std::size_t i = 0; i < k; ++i) {
      long long s = 0;
      for (std::size_t j = 0; j < k; ++j) s += mod(a.matrix[i][j], m) * v[j];
      y = static_cast<Elem>(y * m + mod(s, m));
    }
    img[x] = y;
  }
  return img;
}

Elem eval_word(const FiniteGroup& n, const std::string& word) {
  if (word == "1") return 0;
  Elem acc = 0;
  std::size_t pos = 0;
  while (pos < word.size()) {
    std::size_t end = word.find('*', pos);
    if (end == std::string::npos) end = word.size();
    const std::string f = word.substr(pos, end - pos);
    const std::size_t caret = f.find('^');
    const std::size_t k = std::stoul(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    const long long e = caret == std::string::npos ? 1 : std::stoll(f.substr(caret + 1));
    if (k == 0 || k > n.generators().size())
      throw Error(ErrorCode::DimensionMismatch, "g" + std::to_string(k) + " is not a generator of the normal subgroup");
    acc = n.mul(acc, n.power(n.generators()[k - 1], e));
    pos = end + 1;
  }
  return acc;
}

std::vector<Elem> images_action(const FiniteGroup& n, const ActionSpec& a) {
  const auto& gens = n.generators();
  if (a.images.size() != gens.size())
    throw Error(ErrorCode::DimensionMismatch, "imgs lists " + std::to_string(a.images.size()) +
                                                  " words but the normal subgroup has " + std::to_string(gens.size()) +
                                                  " generators");
  std::vector<Elem> gi;
  for (const auto& w : a.images) gi.push_back(eval_word(n, w));
  const Elem unset = ~Elem{0};
  std::vector<Elem> img(n.order(), unset);
  img[0] = 0;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem y = n.mul(x, gens[i]);
      const Elem fy = n.mul(img[x], gi[i]);
      if (img[y] == unset) {
        img[y] = fy;
        queue.push_back(y);
      } else if (img[y] != fy) {
        throw Error(ErrorCode::ActionNotHomomorphism, "generator images do not extend to a homomorphism");
      }
    }
  }
  return img;
}

}  // namespace

ConstructionSpec parse_construction(const std::string& text) { return Parser(text).parse(); }

std::string print_construction(const ConstructionSpec& spec) {
  std::ostringstream out;
  print(spec, out);
  return out.str();
}

FiniteGroup build_group(const ConstructionSpec& s, std::size_t cap) {
  using K = ConstructionSpec::Kind;
  switch (s.kind) {
    case K::Cyclic:
      if (s.n > cap || s.n > kMaxOrder)
        throw Error(ErrorCode::OrderCapExceeded, "C(" + std::to_string(s.n) + ") exceeds the order cap");
      return make_cyclic(s.n);
    case K::Direct: return make_direct_product(build_group(*s.left, cap), build_group(*s.right, cap), cap);
    case K::Pc: return group_from_pc_presentation(s.pc, cap);
    case K::Perm: return group_from_permutations(s.n, s.perms, cap);
    case K::Named: return build_group(parse_construction(find_corpus_entry(s.name)->spec), cap);
    case K::Semidirect: {
      FiniteGroup n = build_group(*s.left, cap);
      FiniteGroup h = build_group(*s.right, cap);
      if (n.order() * h.order() > cap)
        throw Error(ErrorCode::OrderCapExceeded, "semidirect product exceeds the order cap");
      if (h.generators().size() > 1)
        throw Error(ErrorCode::InvalidInput, "the acting group must have a single designated generator");
      std::vector<Elem> img;
      switch (s.action.kind) {
        case ActionSpec::Kind::Power:
          if (!n.is_abelian()) throw Error(ErrorCode::NotAbelian, "pow() actions need an abelian normal subgroup");
          img.resize(n.order());
          for (Elem x = 0; x < n.order(); ++x) img[x] = n.power(x, s.action.power);
          break;
        case ActionSpec::Kind::Matrix: img = matrix_action(*s.left, n, s.action); break;
        case ActionSpec::Kind::Images: img = images_action(n, s.action); break;
      }
      if (h.order() == 1) return make_semidirect_product(n, h, {identity_hom(n)}, cap);
      GroupHom alpha{n, n, std::move(img)};
      return make_semidirect_product(n, h, action_from_generators(n, h, {alpha}), cap);
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown construction");
}

FiniteGroup build_group(const std::string& text, std::size_t cap) { return build_group(parse_construction(text), cap); }

}  // namespace grpx
