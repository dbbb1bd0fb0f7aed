#include "grpx/pc_presentation.hpp"

#include <string>

#include "grpx/error.hpp"
#include "grpx/group_build.hpp"

namespace grpx {

namespace {

// Collection from the left over normal words encoded as element indices.
class Collector {
 public:
  Collector(const PcPresentation& pcp, std::size_t n)
      : p_(pcp.prime), k_(static_cast<std::uint32_t>(pcp.size())), n_(n), weight_(k_),
        power_(k_, 0), comm_(k_, std::vector<Elem>(k_, 0)), memo_(k_, std::vector<std::int32_t>(n, -1)) {
    std::size_t w = 1;
    for (std::uint32_t i = k_; i-- > 0;) {
      weight_[i] = static_cast<Elem>(w);
      w *= p_;
    }
    // Relations of generator i only mention later generators, so they can be
    // normalized from the last generator backwards.
    for (std::uint32_t i = k_; i-- > 0;) {
      if (auto it = pcp.power.find(i); it != pcp.power.end()) power_[i] = normalize(it->second, i, "power");
      for (std::uint32_t j = i + 1; j < k_; ++j)
        if (auto it = pcp.comm.find({j, i}); it != pcp.comm.end()) comm_[j][i] = normalize(it->second, j, "commutator");
    }
  }

  Elem weight(std::uint32_t i) const { return weight_[i]; }
  Elem power_word(std::uint32_t i) const { return power_[i]; }
  Elem comm_word(std::uint32_t j, std::uint32_t i) const { return comm_[j][i]; }

  std::uint32_t digit(Elem w, std::uint32_t i) const { return (w / weight_[i]) % p_; }

  Elem mul_gen(Elem w, std::uint32_t j) {
    if (memo_[j][w] >= 0) return static_cast<Elem>(memo_[j][w]);
    const Elem tail_mask = weight_[j];  // digits after j live below weight_[j]
    Elem head = w - w % tail_mask;
    const Elem tail = w % tail_mask;
    Elem carry = 0;
    if (digit(w, j) + 1 < p_) {
      head += weight_[j];
    } else {
      head -= (p_ - 1) * weight_[j];
      carry = power_[j];
    }
    // tail * g_j = g_j * tail^(g_j) and g_l^(g_j) = g_l [g_l, g_j].
    Elem conj = 0;
    for (std::uint32_t l = j + 1; l < k_; ++l)
      for (std::uint32_t r = digit(tail, l); r > 0; --r) {
        conj = mul_gen(conj, l);
        conj = mul_elem(conj, comm_[l][j]);
      }
    const Elem result = head + mul_elem(carry, conj);
    memo_[j][w] = static_cast<std::int32_t>(result);
    return result;
  }

  Elem mul_elem(Elem u, Elem v) {
    for (std::uint32_t l = 0; l < k_; ++l)
      for (std::uint32_t r = digit(v, l); r > 0; --r) u = mul_gen(u, l);
    return u;
  }

 private:
  Elem normalize(const PcWord& word, std::uint32_t after, const char* what) {
    Elem u = 0;
    for (auto [g, e] : word) {
      if (g >= k_ || g <= after)
        throw Error(ErrorCode::InconsistentPresentation,
                    std::string(what) + " relation uses a generator that is not later than g" +
                        std::to_string(after + 1));
      for (std::uint32_t r = 0; r < e % n_; ++r) u = mul_gen(u, g);
    }
    return u;
  }

  std::uint32_t p_, k_;
  std::size_t n_;
  std::vector<Elem> weight_;
  std::vector<Elem> power_;
  std::vector<std::vector<Elem>> comm_;
  std::vector<std::vector<std::int32_t>> memo_;
};

}  // namespace

FiniteGroup group_from_pc_presentation(const PcPresentation& pcp, std::size_t cap) {
  if (!is_prime(pcp.prime)) throw Error(ErrorCode::NotPrime, std::to_string(pcp.prime) + " is not prime");
  const auto k = static_cast<std::uint32_t>(pcp.size());
  std::size_t n = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    n *= pcp.prime;
    if (n > cap || n > kMaxOrder)
      throw Error(ErrorCode::OrderCapExceeded, "pc presentation order exceeds cap " + std::to_string(cap));
  }
  if (k == 0) return make_cyclic(1);

  Collector col(pcp, n);
  std::vector<std::vector<Elem>> right(k, std::vector<Elem>(n));
  for (std::uint32_t j = 0; j < k; ++j) {
    std::vector<char> hit(n, 0);
    for (Elem x = 0; x < n; ++x) {
      const Elem y = col.mul_gen(x, j);
      if (hit[y])
        throw Error(ErrorCode::InconsistentPresentation,
                    "collection yields fewer than " + std::to_string(n) + " distinct elements");
      hit[y] = 1;
      right[j][x] = y;
    }
  }
  auto table = detail::table_from_right_actions(n, right, "pc presentation");
  std::vector<Elem> gens;
  for (std::uint32_t i = 0; i < k; ++i) gens.push_back(col.weight(i));
  if (detail::light_associativity_violation(n, table, gens))
    throw Error(ErrorCode::InconsistentPresentation, "collected multiplication is not associative");
  FiniteGroup g = FiniteGroup::from_trusted_table(n, std::move(table), gens);
  for (std::uint32_t i = 0; i < k; ++i) {
    if (g.power(gens[i], pcp.prime) != col.power_word(i))
      throw Error(ErrorCode::InconsistentPresentation, "power relation of " + pcp.names[i] + " fails");
    for (std::uint32_t j = i + 1; j < k; ++j)
      if (g.comm(gens[j], gens[i]) != col.comm_word(j, i))
        throw Error(ErrorCode::InconsistentPresentation,
                    "commutator relation [" + pcp.names[j] + "," + pcp.names[i] + "] fails");
  }
  return g;
}

}  // namespace grpx
