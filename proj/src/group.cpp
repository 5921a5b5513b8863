#include "groupcodes/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "groupcodes/error.hpp"

namespace groupcodes {

namespace {

void require_order(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "group order must be positive");
  if (n > Group::kMaxOrder) throw Error(ErrorKind::kTooLarge, "group order " + std::to_string(n) + " exceeds 64");
}

}  // namespace

Group::Group(std::size_t n, std::vector<std::size_t> table, std::vector<std::string> labels, std::string name)
    : n_(n), table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name)) {
  for (auto v : table_)
    if (v >= n_) throw Error(ErrorKind::kInvalidArgument, "table entry out of range");

  // Latin square.
  for (std::size_t i = 0; i < n_; ++i) {
    std::vector<bool> row_seen(n_, false);
    std::vector<bool> col_seen(n_, false);
    for (std::size_t j = 0; j < n_; ++j) {
      row_seen[mul(i, j)] = true;
      col_seen[mul(j, i)] = true;
    }
    if (std::count(row_seen.begin(), row_seen.end(), true) != static_cast<std::ptrdiff_t>(n_) ||
        std::count(col_seen.begin(), col_seen.end(), true) != static_cast<std::ptrdiff_t>(n_))
      throw Error(ErrorKind::kInvalidArgument, "table is not a Latin square");
  }

  bool found = false;
  for (std::size_t e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::kInvalidArgument, "table has no two-sided identity");

  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error(ErrorKind::kInvalidArgument, "table is not associative");

  inverse_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (mul(a, b) == identity_) {
        if (mul(b, a) != identity_) throw Error(ErrorKind::kInvalidArgument, "inverse is not two-sided");
        inverse_[a] = b;
      }
    }
  }

  if (labels_.empty()) {
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back("g" + std::to_string(i));
  }
  if (labels_.size() != n_) throw Error(ErrorKind::kInvalidArgument, "label count differs from group order");

  std::vector<bool> in_sub(n_, false);
  in_sub[identity_] = true;
  std::size_t sub_size = 1;
  for (std::size_t g = 0; g < n_ && sub_size < n_; ++g) {
    if (in_sub[g]) continue;
    generators_.push_back(g);
    // Closure of the current generators by breadth-first multiplication.
    std::vector<std::size_t> frontier;
    for (std::size_t x = 0; x < n_; ++x)
      if (in_sub[x]) frontier.push_back(x);
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (auto x : frontier) {
        for (auto s : generators_) {
          const std::size_t y = mul(x, s);
          if (!in_sub[y]) {
            in_sub[y] = true;
            ++sub_size;
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
  }
}

std::shared_ptr<const Group> Group::from_table(std::vector<std::vector<std::size_t>> table,
                                               std::vector<std::string> labels, std::string name) {
  const std::size_t n = table.size();
  require_order(n);
  std::vector<std::size_t> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::kInvalidArgument, "multiplication table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return std::shared_ptr<const Group>(new Group(n, std::move(flat), std::move(labels), std::move(name)));
}

std::shared_ptr<const Group> Group::cyclic(std::size_t k) {
  require_order(k);
  std::vector<std::size_t> t(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) t[i * k + j] = (i + j) % k;
    labels[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
  }
  return std::shared_ptr<const Group>(new Group(k, std::move(t), std::move(labels), "C" + std::to_string(k)));
}

std::shared_ptr<const Group> Group::direct_product(const Group& a, const Group& b) {
  const std::size_t n = a.order() * b.order();
  require_order(n);
  std::vector<std::size_t> t(n * n);
  std::vector<std::string> labels(n);
  const std::size_t nb = b.order();
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "(" + a.label(i / nb) + "," + b.label(i % nb) + ")";
    for (std::size_t j = 0; j < n; ++j)
      t[i * n + j] = a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb);
  }
  return std::shared_ptr<const Group>(new Group(n, std::move(t), std::move(labels), a.name() + "x" + b.name()));
}

std::shared_ptr<const Group> Group::symmetric(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "symmetric group needs k >= 1");
  std::size_t n = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    n *= i;
    if (n > kMaxOrder) throw Error(ErrorKind::kTooLarge, "S_" + std::to_string(k) + " has more than 64 elements");
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto index_of = [&](const std::vector<std::size_t>& p) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::size_t> t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::ostringstream out;
    out << '[';
    for (std::size_t x = 0; x < k; ++x) out << (x ? " " : "") << perms[i][x] + 1;
    out << ']';
    labels[i] = out.str();
    for (std::size_t j = 0; j < n; ++j) {
      // (σ·τ)(x) = σ(τ(x))
      std::vector<std::size_t> c(k);
      for (std::size_t x = 0; x < k; ++x) c[x] = perms[i][perms[j][x]];
      t[i * n + j] = index_of(c);
    }
  }
  return std::shared_ptr<const Group>(new Group(n, std::move(t), std::move(labels), "S" + std::to_string(k)));
}

std::shared_ptr<const Group> Group::dihedral(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "dihedral group needs k >= 1");
  if (2 * k > kMaxOrder) throw Error(ErrorKind::kTooLarge, "D_" + std::to_string(k) + " has more than 64 elements");
  const std::size_t n = 2 * k;
  std::vector<std::size_t> t(n * n);
  std::vector<std::string> labels(n);
  // Index i + k·s stands for r^i s^s; (r^i s^a)(r^j s^b) = r^{i + (-1)^a j} s^{a+b}.
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t i = x % k;
    const std::size_t a = x / k;
    std::string rot = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
    labels[x] = a == 0 ? (rot.empty() ? "1" : rot) : (rot.empty() ? "s" : rot + "s");
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t j = y % k;
      const std::size_t b = y / k;
      const std::size_t rj = a == 0 ? j : (k - j) % k;
      t[x * n + y] = (i + rj) % k + k * ((a + b) % 2);
    }
  }
  return std::shared_ptr<const Group>(new Group(n, std::move(t), std::move(labels), "D" + std::to_string(k)));
}

bool Group::is_abelian() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

std::vector<std::size_t> Group::center() const {
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < n_; ++i) {
    bool central = true;
    for (std::size_t j = 0; j < n_ && central; ++j) central = mul(i, j) == mul(j, i);
    if (central) z.push_back(i);
  }
  return z;
}

std::size_t Group::element_order(std::size_t i) const {
  std::size_t k = 1;
  for (std::size_t x = i; x != identity_; x = mul(x, i)) ++k;
  return k;
}

std::size_t Group::power(std::size_t i, std::size_t e) const {
  std::size_t x = identity_;
  for (std::size_t t = 0; t < e; ++t) x = mul(x, i);
  return x;
}

}  // namespace groupcodes
