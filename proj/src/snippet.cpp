#include "symtrap/snippet.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>

#include "symtrap/detail/memo.hpp"
#include "symtrap/errors.hpp"

namespace symtrap {

LambdaParity parity_of_lambda(int lambda) { return lambda % 2 == 0 ? LambdaParity::Even : LambdaParity::Odd; }

std::string to_string(LambdaParity parity) { return parity == LambdaParity::Even ? "even" : "odd"; }

int inversion_sign(int n, LambdaParity parity) {
  const int lambda_sign = parity == LambdaParity::Even ? 1 : -1;
  const int reversal_sign = ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1;
  return lambda_sign * reversal_sign;
}

std::string Sector::to_string() const {
  std::string out;
  for (int label : ordering) {
    if (ordering.size() >= 10 && !out.empty()) out += ",";
    out += std::to_string(label);
  }
  return out;
}

std::vector<Sector> sectors(int n) {
  if (n < 1 || n > kMaxCharacterN) throw InvalidInput("sector enumeration needs 1 <= N <= " + std::to_string(kMaxCharacterN));
  std::vector<int> ordering(static_cast<std::size_t>(n));
  std::iota(ordering.begin(), ordering.end(), 1);
  std::vector<Sector> out;
  do {
    out.push_back({ordering});
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  return out;
}

std::size_t sector_index(const Sector& s) {
  const std::size_t n = s.ordering.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (s.ordering[j] < s.ordering[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

ClassFunction sector_rep_characters(int n, LambdaParity parity) {
  const CharacterTable table = character_table_snz2(n);
  // q -> c.q.w0 fixes q exactly when c = q w0 q^{-1}, so the fixed count is the
  // centralizer order of the reversal w0 for that one class and zero elsewhere.
  std::vector<int> reversal_cycles(static_cast<std::size_t>(n / 2), 2);
  if (n % 2 == 1) reversal_cycles.push_back(1);
  const CycleType reversal{Partition(reversal_cycles)};

  ClassFunction f{GroupKind::SnZ2, n, {}};
  for (const auto& cls : table.classes()) {
    if (!cls.inverted) {
      f.values.push_back(cls.cycle.is_identity() ? to_int64(factorial(n)) : 0);
    } else if (cls.cycle == reversal) {
      f.values.push_back(inversion_sign(n, parity) * to_int64(centralizer_order(reversal)));
    } else {
      f.values.push_back(0);
    }
  }
  return f;
}

MultiplicityVector snippet_reduction(int n, LambdaParity parity) {
  static detail::Memo<std::pair<int, int>, MultiplicityVector> memo;
  return memo.get_or_compute({n, parity == LambdaParity::Even ? 0 : 1}, [&] {
    return reduce_class_function(sector_rep_characters(n, parity), character_table_snz2(n));
  });
}

Rational SectorVector::dot(const SectorVector& other) const {
  if (other.amplitudes.size() != amplitudes.size()) throw InvalidInput("sector vectors of different sizes");
  // Integer amplitudes are the norm; sum them without rational normalization.
  Count whole = 0;
  Rational sum = 0;
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    const Rational& a = amplitudes[i];
    const Rational& b = other.amplitudes[i];
    if (a.is_zero() || b.is_zero()) continue;
    const auto& ra = a.backend().data();
    const auto& rb = b.backend().data();
    if (ra.denominator() == 1 && rb.denominator() == 1)
      whole += ra.numerator() * rb.numerator();
    else
      sum += a * b;
  }
  return sum + Rational(whole);
}

namespace {

// Only directions matter until the final primitive rescaling, so the
// projections run on integer vectors and never divide.
using Vec = std::vector<Count>;

// Index tables for the left action of transpositions and for the reversal.
class SectorSpace {
 public:
  explicit SectorSpace(int n) : n_(n), sectors_(sectors(n)) {
    const std::size_t size = sectors_.size();
    transposition_.assign(static_cast<std::size_t>(n * n), {});
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        auto& table = transposition_[static_cast<std::size_t>(a * n + b)];
        table.resize(size);
        for (std::size_t q = 0; q < size; ++q) {
          Sector moved = sectors_[q];
          for (int& label : moved.ordering) {
            if (label == a + 1) label = b + 1;
            else if (label == b + 1) label = a + 1;
          }
          table[q] = sector_index(moved);
        }
      }
    reversal_.resize(size);
    for (std::size_t q = 0; q < size; ++q) {
      Sector reversed = sectors_[q];
      std::reverse(reversed.ordering.begin(), reversed.ordering.end());
      reversal_[q] = sector_index(reversed);
    }
  }

  int n() const { return n_; }
  std::size_t size() const { return sectors_.size(); }

  // Particles a < b are 0-based.
  Vec transpose(const Vec& v, int a, int b) const {
    if (a > b) std::swap(a, b);
    const auto& table = transposition_[static_cast<std::size_t>(a * n_ + b)];
    Vec out(v.size());
    for (std::size_t q = 0; q < v.size(); ++q)
      if (v[q] != 0) out[table[q]] = v[q];
    return out;
  }

  Vec invert(const Vec& v, int sign) const {
    Vec out(v.size());
    for (std::size_t q = 0; q < v.size(); ++q)
      if (v[q] != 0) out[reversal_[q]] = sign * v[q];
    return out;
  }

  // Jucys-Murphy element X_k = sum_{i<k} (i k), k 0-based.
  Vec jucys_murphy(const Vec& v, int k) const {
    Vec out(v.size());
    for (int i = 0; i < k; ++i) {
      const auto& table = transposition_[static_cast<std::size_t>(i * n_ + k)];
      for (std::size_t q = 0; q < v.size(); ++q)
        if (v[q] != 0) out[table[q]] += v[q];
    }
    return out;
  }

  std::size_t apply_permutation_index(const std::vector<int>& perm, std::size_t q) const {
    Sector moved = sectors_[q];
    for (int& label : moved.ordering) label = perm[static_cast<std::size_t>(label - 1)] + 1;
    return sector_index(moved);
  }

 private:
  int n_;
  std::vector<Sector> sectors_;
  std::vector<std::vector<std::size_t>> transposition_;
  std::vector<std::size_t> reversal_;
};

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Count& x) { return x == 0; });
}

Count dot(const Vec& a, const Vec& b) {
  Count sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) sum += a[i] * b[i];
  return sum;
}

// Divides out the common factor, keeping the sign.
void reduce(Vec& v) {
  Count g = 0;
  for (const Count& x : v)
    if (x != 0) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (Count& x : v)
      if (x != 0) x /= g;
}

// Removes the components along an orthogonal family: v <- (b.b) v - (v.b) b.
void orthogonalize(Vec& v, const std::vector<Vec>& family) {
  for (const Vec& b : family) {
    const Count overlap = dot(v, b);
    if (overlap == 0) continue;
    const Count norm = dot(b, b);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = norm * v[i] - overlap * b[i];
    reduce(v);
  }
}

// Projects onto the Gelfand-Tsetlin vector of a standard tableau (given as the
// row of each entry): successive eigenprojections of X_2, ..., X_N onto the
// content of the box holding k, interpolating over the addable boxes only.
Vec tableau_projection(const SectorSpace& space, Vec v, const std::vector<int>& rows) {
  const int n = space.n();
  std::vector<int> row_length(static_cast<std::size_t>(n), 0);
  row_length[static_cast<std::size_t>(rows[0])] = 1;
  for (int k = 1; k < n && !is_zero(v); ++k) {
    const int target_row = rows[static_cast<std::size_t>(k)];
    const int target_content = row_length[static_cast<std::size_t>(target_row)] - target_row;
    for (int r = 0; r < n; ++r) {
      const int len = row_length[static_cast<std::size_t>(r)];
      const bool addable = r == 0 || row_length[static_cast<std::size_t>(r - 1)] > len;
      if (addable && r != target_row) {
        const int other_content = len - r;
        // (X_k - c) / (c_target - c), up to the positive or negative scale
        Vec xv = space.jucys_murphy(v, k);
        for (std::size_t q = 0; q < v.size(); ++q) xv[q] -= other_content * v[q];
        if (target_content < other_content)
          for (Count& x : xv) x = -x;
        v = std::move(xv);
        reduce(v);
      }
      if (len == 0) break;  // only the first empty row can take a box
    }
    ++row_length[static_cast<std::size_t>(target_row)];
  }
  return v;
}

Vec parity_projection(const SectorSpace& space, const Vec& v, int pi, int inversion) {
  const Vec inverted = space.invert(v, inversion);
  Vec out(v.size());
  for (std::size_t q = 0; q < v.size(); ++q) out[q] = v[q] + pi * inverted[q];
  reduce(out);
  return out;
}

// Coprime integer amplitudes with a positive first entry.
SectorVector to_primitive(int n, Vec v) {
  reduce(v);
  auto first = std::find_if(v.begin(), v.end(), [](const Count& x) { return x != 0; });
  const int orient = (first != v.end() && *first < 0) ? -1 : 1;
  SectorVector out{n, {}, 0};
  out.amplitudes.reserve(v.size());
  for (const Count& x : v) {
    Rational scaled(x * orient);
    out.squared_norm += scaled * scaled;
    out.amplitudes.push_back(std::move(scaled));
  }
  return out;
}

Vec unit(std::size_t size, std::size_t q) {
  Vec e(size);
  e[q] = 1;
  return e;
}

void check_projection_args(int n, const Partition& p, int pi) {
  if (n < 2 || n > kMaxSectorBasisN)
    throw InvalidInput("sector bases are built for 2 <= N <= " + std::to_string(kMaxSectorBasisN));
  if (p.n() != n) throw InvalidInput("irrep " + p.to_string() + " is not a partition of " + std::to_string(n));
  if (pi != 1 && pi != -1) throw InvalidInput("relative parity must be +1 or -1");
}

// Entry k and k+1 (0-based k) swapped; empty when the result is not standard.
std::optional<std::vector<int>> swap_entries(const std::vector<int>& rows, std::size_t k) {
  if (rows[k] == rows[k + 1]) return std::nullopt;
  std::vector<int> swapped = rows;
  std::swap(swapped[k], swapped[k + 1]);
  // Standard iff every prefix is a partition shape.
  std::vector<int> lengths(rows.size(), 0);
  for (int r : swapped) {
    const auto ur = static_cast<std::size_t>(r);
    if (r > 0 && lengths[ur - 1] <= lengths[ur]) return std::nullopt;
    ++lengths[ur];
  }
  return swapped;
}

}  // namespace

std::vector<SnippetBasisVector> snippet_projection_basis(int n, LambdaParity parity, const Partition& p, int pi) {
  check_projection_args(n, p, pi);
  const Count multiplicity = snippet_reduction(n, parity).at(p, pi);
  if (multiplicity == 0) return {};
  const std::size_t copies = static_cast<std::size_t>(to_int64(multiplicity));

  const SectorSpace space(n);
  const int inversion = inversion_sign(n, parity);
  const auto tableaux = standard_tableaux(p);

  // First tableau: one seed per copy, taken from sectors in lexicographic order.
  std::vector<std::vector<Vec>> by_tableau(tableaux.size());
  for (std::size_t q = 0; q < space.size() && by_tableau[0].size() < copies; ++q) {
    Vec v = tableau_projection(space, parity_projection(space, unit(space.size(), q), pi, inversion), tableaux[0]);
    orthogonalize(v, by_tableau[0]);
    if (!is_zero(v)) by_tableau[0].push_back(std::move(v));
  }
  if (by_tableau[0].size() != copies)
    throw AlgorithmViolation("found " + std::to_string(by_tableau[0].size()) + " copies of " + p.to_string() +
                             " but the character reduction predicts " + multiplicity.str());

  // Partners: walk the tableau graph by adjacent transpositions s_k, which map
  // the Gelfand-Tsetlin line of T' into that of s_k T' within each copy.
  std::vector<bool> reached(tableaux.size(), false);
  reached[0] = true;
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t from = frontier.front();
    frontier.pop_front();
    for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n); ++k) {
      auto swapped = swap_entries(tableaux[from], k);
      if (!swapped) continue;
      const auto it = std::find(tableaux.begin(), tableaux.end(), *swapped);
      const auto to = static_cast<std::size_t>(it - tableaux.begin());
      if (reached[to]) continue;
      reached[to] = true;
      for (const Vec& v : by_tableau[from]) {
        Vec partner = tableau_projection(space, space.transpose(v, static_cast<int>(k), static_cast<int>(k) + 1),
                                         tableaux[to]);
        if (is_zero(partner)) throw AlgorithmViolation("adjacent transposition annihilated a basis vector");
        by_tableau[to].push_back(std::move(partner));
      }
      frontier.push_back(to);
    }
  }

  std::vector<SnippetBasisVector> out;
  for (std::size_t tau = 0; tau < copies; ++tau)
    for (std::size_t j = 0; j < tableaux.size(); ++j)
      out.push_back({{p, pi, static_cast<int>(tau), static_cast<int>(j) + 1}, to_primitive(n, by_tableau[j][tau])});
  return out;
}

std::vector<SectorVector> component_projection_basis(int n, LambdaParity parity, const Partition& p, int pi,
                                                     const ComponentPattern& pattern) {
  check_projection_args(n, p, pi);
  if (pattern.n() != n) throw InvalidInput("pattern " + pattern.to_string() + " is not for N=" + std::to_string(n));
  const auto isotypic = snippet_projection_basis(n, parity, p, pi);
  if (isotypic.empty()) return {};

  const SectorSpace space(n);
  const bool fermi = pattern.statistics() == Statistics::Fermi;

  // Young (anti)symmetrizer: every permutation that keeps each block in place.
  std::vector<int> block_of;
  for (int b = 0; b < pattern.counts().rows(); ++b) block_of.insert(block_of.end(), pattern.counts()[static_cast<std::size_t>(b)], b);
  std::vector<std::vector<int>> subgroup;
  std::vector<int> signs;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool preserves = true;
    for (std::size_t i = 0; i < perm.size(); ++i)
      preserves = preserves && block_of[i] == block_of[static_cast<std::size_t>(perm[i])];
    if (!preserves) continue;
    subgroup.push_back(perm);
    signs.push_back(fermi ? sign(cycle_type_of(perm)) : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Vec> image;
  const Count expected = snippet_reduction(n, parity).at(p, pi) * branch_multiplicity(p, pattern);
  for (const auto& basis_vector : isotypic) {
    Vec source;
    for (const Rational& x : basis_vector.vector.amplitudes) source.push_back(boost::multiprecision::numerator(x));
    Vec v(source.size());
    for (std::size_t g = 0; g < subgroup.size(); ++g)
      for (std::size_t q = 0; q < source.size(); ++q)
        if (source[q] != 0) v[space.apply_permutation_index(subgroup[g], q)] += signs[g] * source[q];
    orthogonalize(v, image);
    if (!is_zero(v)) image.push_back(std::move(v));
  }
  if (Count(image.size()) != expected)
    throw AlgorithmViolation("component projection has rank " + std::to_string(image.size()) + ", expected " +
                             expected.str());
  std::vector<SectorVector> out;
  for (const Vec& v : image) out.push_back(to_primitive(n, v));
  return out;
}

std::vector<LevelGinf> enumerate_levels_ginf(int n, int max_excitation) {
  if (max_excitation < 0) throw InvalidInput("maximum energy must be non-negative");
  const Partition antisymmetric(std::vector<int>(static_cast<std::size_t>(n), 1));
  std::vector<LevelGinf> out;
  for (int x = 0; x <= max_excitation; ++x) {
    for (const auto& label : labels_in_shell(x)) {
      const Count seeds = lambda_reduction(n, label.lambda).at(antisymmetric);
      if (seeds == 0) continue;
      MultiplicityVector reduction = snippet_reduction(n, parity_of_lambda(label.lambda));
      for (Count& c : reduction.counts) c *= seeds;
      out.push_back({label, std::move(reduction), seeds});
    }
  }
  return out;
}

}  // namespace symtrap
