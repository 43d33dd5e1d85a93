#include "symtrap/oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <random>

#include "symtrap/errors.hpp"

namespace symtrap {

SignedPermutation SignedPermutation::identity(std::size_t size) {
  SignedPermutation out;
  out.image.resize(size);
  std::iota(out.image.begin(), out.image.end(), std::size_t{0});
  out.sign.assign(size, 1);
  return out;
}

std::int64_t SignedPermutation::trace() const {
  std::int64_t t = 0;
  for (std::size_t j = 0; j < image.size(); ++j)
    if (image[j] == j) t += sign[j];
  return t;
}

bool SignedPermutation::is_identity() const { return *this == identity(size()); }

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size()) throw InvalidInput("cannot compose matrices of different sizes");
  SignedPermutation out;
  out.image.resize(b.size());
  out.sign.resize(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    out.image[j] = a.image[b.image[j]];
    out.sign[j] = a.sign[b.image[j]] * b.sign[j];
  }
  return out;
}

namespace {

using Perm = std::vector<int>;

Perm multiply(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

Perm adjacent_transposition(int n, int k) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k + 1)]);
  return p;
}

Perm representative(const CycleType& type) {
  Perm p;
  int start = 0;
  for (int len : type.cycles.parts()) {
    for (int i = 0; i < len; ++i) p.push_back(start + (i + 1) % len);
    start += len;
  }
  return p;
}

int permutation_sign(const Perm& p) { return sign(cycle_type_of(p)); }

void check_perm(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) throw InvalidInput("permutation has the wrong length");
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw InvalidInput("not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

void fill_generators(ExplicitRep& rep) {
  for (int k = 0; k + 1 < rep.n; ++k) rep.generators.push_back(rep.element(adjacent_transposition(rep.n, k), false));
  if (rep.kind == GroupKind::SnZ2) {
    Perm id(static_cast<std::size_t>(rep.n));
    std::iota(id.begin(), id.end(), 0);
    rep.generators.push_back(rep.element(id, true));
  }
}

void fill_traces(ExplicitRep& rep, const CharacterTable& table) {
  rep.traces = ClassFunction{rep.kind, rep.n, {}};
  for (const auto& cls : table.classes())
    rep.traces.values.push_back(rep.element(representative(cls.cycle), cls.inverted).trace());
}

// Tuples (e_1..e_N) with sum X, in lexicographic order.
void compositions(int n, int x, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == n - 1) {
    current.push_back(x);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = 0; e <= x; ++e) {
    current.push_back(e);
    compositions(n, x - e, current, out);
    current.pop_back();
  }
}

std::string join(const std::vector<int>& values, const char* separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += separator;
    out += std::to_string(values[i]);
  }
  return out;
}

ExplicitRep sector_rep(int n, LambdaParity parity) {
  ExplicitRep rep;
  rep.kind = GroupKind::SnZ2;
  rep.n = n;
  auto all = std::make_shared<std::vector<Sector>>(sectors(n));
  for (const auto& s : *all) rep.basis.push_back(s.to_string());
  const int seed_parity = parity == LambdaParity::Even ? 1 : -1;

  // State q is the antisymmetric seed A restricted to sector q, times sgn(q) so
  // that all N! states are images of each other under relabeling. Relabeling by
  // c multiplies A by sgn(c); inversion multiplies it by (-1)^lambda.
  rep.element = [n, all, seed_parity](std::span<const int> perm, bool inverted) {
    check_perm(perm, n);
    const Perm c(perm.begin(), perm.end());
    const int c_sign = permutation_sign(c);
    SignedPermutation m;
    m.image.resize(all->size());
    m.sign.resize(all->size());
    for (std::size_t q = 0; q < all->size(); ++q) {
      Perm ordering;
      for (int label : (*all)[q].ordering) ordering.push_back(label - 1);
      Perm moved;
      for (int label : ordering) moved.push_back(c[static_cast<std::size_t>(label)]);
      int s = c_sign * permutation_sign(ordering) * permutation_sign(moved);
      if (inverted) {
        const int before = permutation_sign(moved);
        std::reverse(moved.begin(), moved.end());
        s *= seed_parity * before * permutation_sign(moved);
      }
      Sector target;
      for (int label : moved) target.ordering.push_back(label + 1);
      m.image[q] = sector_index(target);
      m.sign[q] = s;
    }
    return m;
  };
  fill_generators(rep);
  fill_traces(rep, character_table_snz2(n));
  return rep;
}

}  // namespace

ShellOracle explicit_shell_rep(int n, int x) {
  if (n < 2 || n > kMaxOracleShellN || x < 0 || x > kMaxOracleShellX)
    throw DimensionGuardExceeded("explicit shell representation needs 2 <= N <= " + std::to_string(kMaxOracleShellN) +
                                 " and 0 <= X <= " + std::to_string(kMaxOracleShellX));
  auto tuples = std::make_shared<std::vector<std::vector<int>>>();
  std::vector<int> current;
  compositions(n, x, current, *tuples);
  auto index = std::make_shared<std::map<std::vector<int>, std::size_t>>();
  for (std::size_t i = 0; i < tuples->size(); ++i) (*index)[(*tuples)[i]] = i;

  ShellOracle out;
  ExplicitRep& rep = out.rep;
  rep.kind = GroupKind::Sn;
  rep.n = n;
  for (const auto& t : *tuples) rep.basis.push_back(join(t, ","));
  // (sigma e)_{sigma(i)} = e_i; there is no inversion in this representation.
  rep.element = [n, tuples, index](std::span<const int> perm, bool inverted) {
    if (inverted) throw InvalidInput("the shell representation carries no parity action");
    check_perm(perm, n);
    SignedPermutation m;
    m.sign.assign(tuples->size(), 1);
    m.image.resize(tuples->size());
    std::vector<int> moved(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < tuples->size(); ++j) {
      for (std::size_t i = 0; i < moved.size(); ++i) moved[static_cast<std::size_t>(perm[i])] = (*tuples)[j][i];
      m.image[j] = index->at(moved);
    }
    return m;
  };
  fill_generators(rep);
  const CharacterTable table = character_table_sn(n);
  fill_traces(rep, table);
  out.reduction = reduce_class_function(rep.traces, table);
  return out;
}

SectorOracle explicit_sector_rep(int n) {
  if (n < 2 || n > kMaxOracleSectorN)
    throw DimensionGuardExceeded("explicit sector representation needs 2 <= N <= " + std::to_string(kMaxOracleSectorN));
  SectorOracle out;
  out.even = sector_rep(n, LambdaParity::Even);
  out.odd = sector_rep(n, LambdaParity::Odd);
  const CharacterTable table = character_table_snz2(n);
  out.even_reduction = reduce_class_function(out.even.traces, table);
  out.odd_reduction = reduce_class_function(out.odd.traces, table);
  return out;
}

void verify_group_relations(const ExplicitRep& rep, int random_words, unsigned seed) {
  const int n = rep.n;
  const std::size_t transpositions = static_cast<std::size_t>(n - 1);
  const bool has_inversion = rep.kind == GroupKind::SnZ2;
  Perm id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  auto fail = [&](const std::string& what) {
    throw ConsistencyFailure("explicit " + to_string(rep.kind) + " representation for N=" + std::to_string(n) +
                             " violates " + what);
  };

  for (const auto& g : rep.generators) {
    if (g.size() != rep.dimension()) fail("matrix size");
    std::vector<char> hit(g.size(), 0);
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g.sign[j] != 1 && g.sign[j] != -1) fail("signed permutation form");
      if (hit[g.image[j]]++) fail("signed permutation form");
    }
    if (!compose(g, g).is_identity()) fail("g^2 = 1 for an involutive generator");
  }
  if (!rep.element(id, false).is_identity()) fail("U(e) = 1");

  // Coxeter relations between adjacent transpositions.
  for (std::size_t a = 0; a < transpositions; ++a)
    for (std::size_t b = a + 1; b < transpositions; ++b) {
      const auto ab = compose(rep.generators[a], rep.generators[b]);
      const auto ba = compose(rep.generators[b], rep.generators[a]);
      if (b == a + 1) {
        if (!(compose(ab, compose(ab, ab)).is_identity())) fail("(s_k s_{k+1})^3 = 1");
      } else if (!(ab == ba)) {
        fail("s_a s_b = s_b s_a");
      }
    }
  if (has_inversion) {
    const auto& inv = rep.generators.back();
    for (std::size_t a = 0; a < transpositions; ++a)
      if (!(compose(inv, rep.generators[a]) == compose(rep.generators[a], inv))) fail("inversion commuting with S_N");
  }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, rep.generators.size() - 1);
  std::uniform_int_distribution<int> length(1, 12);
  auto random_element = [&](Perm& perm, bool& inverted, SignedPermutation& product) {
    perm = id;
    inverted = false;
    product = SignedPermutation::identity(rep.dimension());
    for (int step = length(rng); step > 0; --step) {
      const std::size_t g = pick(rng);
      product = compose(product, rep.generators[g]);
      if (g < transpositions) perm = multiply(perm, adjacent_transposition(n, static_cast<int>(g)));
      else inverted = !inverted;
    }
  };
  for (int w = 0; w < random_words; ++w) {
    Perm pa, pb;
    bool ia = false, ib = false;
    SignedPermutation ma, mb;
    random_element(pa, ia, ma);
    random_element(pb, ib, mb);
    if (!(ma == rep.element(pa, ia))) fail("U(word) = product of generator matrices");
    if (!(compose(rep.element(pa, ia), rep.element(pb, ib)) == rep.element(multiply(pa, pb), ia != ib)))
      fail("U(a)U(b) = U(ab)");
  }
}

std::int64_t projector_rank(const ExplicitRep& rep, const IrrepLabel& irrep) {
  if (rep.n > kMaxOracleProjectorN)
    throw DimensionGuardExceeded("explicit projectors need N <= " + std::to_string(kMaxOracleProjectorN));
  const CharacterTable table = rep.kind == GroupKind::Sn ? character_table_sn(rep.n) : character_table_snz2(rep.n);
  const std::size_t row = table.irrep_index(irrep);
  const std::size_t dim = rep.dimension();

  // sum_g chi(g) U(g); the real prefactor d/|G| does not change the rank.
  std::vector<std::vector<Count>> m(dim, std::vector<Count>(dim, 0));
  Perm perm(static_cast<std::size_t>(rep.n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (bool inverted : {false, true}) {
      if (inverted && rep.kind == GroupKind::Sn) continue;
      const std::int64_t chi = table.value(row, table.class_index({cycle_type_of(perm), inverted}));
      if (chi == 0) continue;
      const SignedPermutation u = rep.element(perm, inverted);
      for (std::size_t j = 0; j < dim; ++j) m[u.image[j]][j] += chi * u.sign[j];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Bareiss elimination keeps every intermediate an exact integer.
  std::int64_t rank = 0;
  Count previous = 1;
  for (std::size_t col = 0; col < dim && static_cast<std::size_t>(rank) < dim; ++col) {
    const std::size_t r = static_cast<std::size_t>(rank);
    std::size_t pivot = r;
    while (pivot < dim && m[pivot][col] == 0) ++pivot;
    if (pivot == dim) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < dim; ++i) {
      for (std::size_t j = col + 1; j < dim; ++j) m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / previous;
      m[i][col] = 0;
    }
    previous = m[r][col];
    ++rank;
  }
  return rank;
}

}  // namespace symtrap
