#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmc/field.hpp"
#include "cmc/monomial.hpp"

namespace cmc {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class RingMismatch : public std::invalid_argument {
  public:
    RingMismatch() : std::invalid_argument("polynomials live in different rings") {}
};

/// Polynomial ring k[x_1..x_n] with a fixed monomial order. Immutable; shared
/// by every polynomial that lives in it.
class Ring {
  public:
    Ring(Field field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex());

    static RingPtr make(Field field, std::vector<std::string> names,
                        MonomialOrder order = MonomialOrder::degrevlex()) {
        return std::make_shared<const Ring>(std::move(field), std::move(names), std::move(order));
    }

    const Field& field() const { return field_; }
    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t require(const std::string& name) const;
    const MonomialOrder& order() const { return order_; }

    int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, names_.size()); }

    RingPtr with_order(MonomialOrder order) const;
    RingPtr with_field(Field field) const;
    /// Appends variables (names must be new); same order kind.
    RingPtr extended(const std::vector<std::string>& extra) const;

    std::string describe() const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.field_ == b.field_ && a.names_ == b.names_ && a.order_ == b.order_;
    }

  private:
    Field field_;
    std::vector<std::string> names_;
    MonomialOrder order_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

} // namespace cmc
