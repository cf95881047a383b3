#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "satpow/errors.hpp"
#include "satpow/order.hpp"

namespace satpow {

// Immutable descriptor of Q[x_1..x_n] plus the active term order. Cheap to
// copy; elements carry one of these and operations insist the descriptors
// agree by value.
class Ring {
 public:
  Ring() = default;
  Ring(std::vector<std::string> vars, Order order = Order::grevlex())
      : d_(std::make_shared<Data>(Data{std::move(vars), order})) {
    if (d_->vars.empty()) throw AlgebraError("ring needs at least one variable");
    for (std::size_t i = 0; i < d_->vars.size(); ++i)
      for (std::size_t j = i + 1; j < d_->vars.size(); ++j)
        if (d_->vars[i] == d_->vars[j])
          throw AlgebraError("duplicate variable name: " + d_->vars[i]);
  }

  bool valid() const { return d_ != nullptr; }
  std::size_t nvars() const { return d_->vars.size(); }
  const std::string& var_name(std::size_t i) const { return d_->vars[i]; }
  const std::vector<std::string>& var_names() const { return d_->vars; }
  const Order& order() const { return d_->order; }

  int var_index(const std::string& name) const {
    auto it = std::find(d_->vars.begin(), d_->vars.end(), name);
    return it == d_->vars.end() ? -1 : static_cast<int>(it - d_->vars.begin());
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->vars == b.d_->vars && a.d_->order == b.d_->order;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  struct Data {
    std::vector<std::string> vars;
    Order order;
  };
  std::shared_ptr<const Data> d_;
};

inline Ring with_order(const Ring& r, const Order& ord) {
  return Ring(r.var_names(), ord);
}

// Prepend one auxiliary variable and switch to the elimination order that
// puts it in the leading block. Used by the intersection trick.
inline Ring adjoin_elim_var(const Ring& r, const std::string& name = "t") {
  std::string nm = name;
  while (r.var_index(nm) >= 0) nm += "_";
  std::vector<std::string> vars;
  vars.reserve(r.nvars() + 1);
  vars.push_back(nm);
  for (const auto& v : r.var_names()) vars.push_back(v);
  return Ring(std::move(vars), Order::block_elim(1));
}

// Append gamma symmetric-algebra variables, grevlex over the whole list.
inline Ring sym_extension(const Ring& r, int gamma) {
  std::vector<std::string> vars = r.var_names();
  for (int j = 1; j <= gamma; ++j) {
    std::string nm = "y" + std::to_string(j);
    while (std::find(vars.begin(), vars.end(), nm) != vars.end()) nm += "_";
    vars.push_back(nm);
  }
  return Ring(std::move(vars), Order::grevlex());
}

}  // namespace satpow
