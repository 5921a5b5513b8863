#pragma once

// Finite groups as closed multiplication tables.
//
// The index order of the table is the ordering g_1, ..., g_n that
// identifies K^n with KG, so it is part of every coordinate convention
// downstream. The identity is not required to sit at index 0, but every
// built-in constructor puts it there.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace groupcodes {

class Group {
 public:
  static constexpr std::size_t kMaxOrder = 64;

  /// Validates closure, associativity, identity and inverses.
  /// Throws Error(kInvalidArgument) on a malformed table, kTooLarge past 64.
  static std::shared_ptr<const Group> from_table(std::vector<std::vector<std::size_t>> table,
                                                 std::vector<std::string> labels = {}, std::string name = "table");

  static std::shared_ptr<const Group> cyclic(std::size_t k);
  static std::shared_ptr<const Group> direct_product(const Group& a, const Group& b);
  static std::shared_ptr<const Group> symmetric(std::size_t k);
  static std::shared_ptr<const Group> dihedral(std::size_t k);  // order 2k

  std::size_t order() const { return n_; }
  std::size_t mul(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::string& name() const { return name_; }
  /// A generating set found greedily in index order.
  const std::vector<std::size_t>& generators() const { return generators_; }

  bool is_abelian() const;
  std::vector<std::size_t> center() const;
  std::size_t element_order(std::size_t i) const;
  std::size_t power(std::size_t i, std::size_t e) const;

 private:
  Group(std::size_t n, std::vector<std::size_t> table, std::vector<std::string> labels, std::string name);

  std::size_t n_;
  std::vector<std::size_t> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
  std::string name_;
  std::vector<std::size_t> generators_;
};

using GroupPtr = std::shared_ptr<const Group>;

}  // namespace groupcodes
