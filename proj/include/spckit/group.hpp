#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spckit {

/// A finite group presented by its Cayley table. Elements are dense indices
/// 0..order-1; the table is validated on construction (identity, associativity,
/// inverses). Canonical constructors place the identity at index 0, but tables
/// ingested from outside may carry it anywhere (see identity()).
///
/// Groups are small by design: orders above 12 are rejected, which keeps every
/// downstream enumeration exhaustive-friendly.
class FiniteGroup {
public:
    static constexpr int kMaxOrder = 12;

    /// Validate and adopt a Cayley table; labels default to "e", "g1", "g2", ...
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::vector<std::string> labels = {});

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int m);
    static FiniteGroup klein4();
    /// Symmetric group on k letters (k <= 3; 4! would exceed the order bound anyway).
    static FiniteGroup symmetric(int k);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    /// Parse a group name as accepted by the CLI: "1", "Z<m>", "V4", "Z2xZ2", "S3".
    static FiniteGroup from_spec(std::string_view spec);

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a * order_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    /// Order of an element (smallest k >= 1 with a^k = identity).
    int element_order(int a) const;
    bool is_abelian() const;

    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Index of the element carrying this label, or nullopt. Plain decimal
    /// indices are accepted too, so text formats can use either form.
    std::optional<int> element_by_label(std::string_view s) const;

    /// Structural equality: same order and same table (labels ignored).
    bool operator==(const FiniteGroup& other) const {
        return order_ == other.order_ && table_ == other.table_;
    }
    bool operator!=(const FiniteGroup& other) const { return !(*this == other); }

private:
    FiniteGroup() = default;

    int order_ = 0;
    int identity_ = 0;
    std::vector<int> table_;    // row-major order_ x order_
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
};

/// Search for a group isomorphism (identity-preserving bijection that maps the
/// table across). Returns the element map a->b, or nullopt. Orders above
/// max_order are rejected (OrderTooLarge); the search prunes by element order.
std::optional<std::vector<int>> groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                                                  int max_order = 8);

}  // namespace spckit
