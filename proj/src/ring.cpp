#include "cmc/ring.hpp"

#include <algorithm>
#include <set>

namespace cmc {

Ring::Ring(Field field, std::vector<std::string> names, MonomialOrder order)
    : field_(field), names_(std::move(names)), order_(std::move(order)) {
    if (names_.size() > kMaxVars)
        throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw std::invalid_argument("duplicate variable name");
    for (const auto& row : order_.weight_rows())
        if (row.size() != names_.size()) throw std::invalid_argument("weight vector length mismatch");
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Ring::require(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw std::invalid_argument("unknown variable '" + name + "'");
    return *i;
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(field_, names_, std::move(order)); }

RingPtr Ring::with_field(Field field) const { return make(field, names_, order_); }

RingPtr Ring::extended(const std::vector<std::string>& extra) const {
    auto names = names_;
    names.insert(names.end(), extra.begin(), extra.end());
    MonomialOrder order = order_;
    if (!order_.weight_rows().empty()) {
        // weights for new variables: 1 in weighted orders, 0 in block rows
        std::vector<std::vector<int>> rows;
        if (order_.kind() == MonomialOrder::Kind::Lex) return make(field_, names, MonomialOrder::lex());
        auto row = order_.weight_rows().front();
        bool positive = std::all_of(row.begin(), row.end(), [](int w) { return w > 0; });
        row.resize(names.size(), positive ? 1 : 0);
        order = positive ? MonomialOrder::weighted_degrevlex(row) : [&] {
            std::vector<std::size_t> elim;
            for (std::size_t i = 0; i < row.size(); ++i)
                if (row[i]) elim.push_back(i);
            return MonomialOrder::elimination(names.size(), elim);
        }();
    }
    return make(field_, std::move(names), std::move(order));
}

std::string Ring::describe() const {
    std::string s = field_.is_rational() ? "QQ[" : "GF(" + std::to_string(field_.characteristic()) + ")[";
    for (std::size_t i = 0; i < names_.size(); ++i) s += (i ? "," : "") + names_[i];
    return s + "]";
}

} // namespace cmc
