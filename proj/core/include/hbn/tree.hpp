#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hbn {

namespace detail {
struct NumAccess;
}

enum class Kind { leaf, v, w };

/// The opposite block kind; leaf maps to itself.
inline Kind flip(Kind k) {
    if (k == Kind::v) return Kind::w;
    if (k == Kind::w) return Kind::v;
    return Kind::leaf;
}

/// A hereditarily binary number.
///
/// Zero is the empty leaf. A positive number is a chain of run-length
/// blocks, least significant first: each node holds the counter of its
/// leading digit block and the remainder of the number as its tail. A `v`
/// node means the leading block is made of o(x)=2x+1 digits (the number is
/// odd); a `w` node means i(x)=2x+2 digits (even, positive). A stored
/// counter c denotes a block of length c+1, counters are themselves values
/// of this type, and adjacent blocks always alternate in kind.
///
/// Values are immutable and share tails freely, so taking or prepending a
/// leading block is O(1). Every tree denotes exactly one natural number and
/// structural equality coincides with numeric equality.
///
/// Nodes carry a plain (non-atomic) reference count and memoize their
/// bitsize on first use, so values must not be shared across threads.
class Num {
public:
    Num() = default;  // zero
    Num(const Num& other) noexcept;
    Num(Num&& other) noexcept : node_(other.node_) { other.node_ = nullptr; }
    Num& operator=(const Num& other) noexcept;
    Num& operator=(Num&& other) noexcept;
    ~Num();

    static Num odd(Num counter, std::vector<Num> rest = {}) {
        return node(Kind::v, std::move(counter), std::move(rest));
    }
    static Num even(Num counter, std::vector<Num> rest = {}) {
        return node(Kind::w, std::move(counter), std::move(rest));
    }
    static Num node(Kind kind, Num counter, std::vector<Num> rest);

    /// Prepend one block in O(1). `tail` must be zero or of the opposite
    /// kind, so that blocks keep alternating.
    static Num cons(Kind kind, Num counter, Num tail);

    Kind kind() const;
    bool is_zero() const { return !node_; }
    bool is_positive() const { return node_ != nullptr; }
    bool is_odd() const { return kind() == Kind::v; }
    bool is_even_positive() const { return kind() == Kind::w; }

    /// Counter of the least significant block. Requires a positive value.
    const Num& counter() const;

    /// The number above the leading block: zero or a value of the opposite
    /// kind. Requires a positive value.
    const Num& tail() const;

    /// Counters of the remaining blocks, materialized in order.
    /// Requires a positive value.
    std::vector<Num> rest() const;

    friend bool operator==(const Num& a, const Num& b);
    friend bool operator!=(const Num& a, const Num& b) { return !(a == b); }

    friend struct detail::NumAccess;

private:
    struct Node;
    explicit Num(Node* n) noexcept : node_(n) {}  // takes ownership
    static void unref(Node* n) noexcept;
    Node* node_ = nullptr;
};

struct Num::Node {
    Kind kind;
    Num counter;
    Num tail;
    std::uint64_t rc = 1;
    // Write-once memos filled in lazily by the arithmetic layer: the exact
    // bitsize as a tree, plus machine-word views of the value and bitsize
    // (0 = not computed yet, UINT64_MAX = too large for 64 bits).
    mutable Num bits;
    mutable bool bits_known = false;
    mutable std::uint64_t value_sat = 0;
    mutable std::uint64_t bits_sat = 0;

    // Nodes are small, fixed-size and allocated in huge numbers, so they
    // come from a slab-backed free list instead of the general heap.
    static void* operator new(std::size_t size);
    static void operator delete(void* p) noexcept;
};

inline Num::Num(const Num& other) noexcept : node_(other.node_) {
    if (node_) ++node_->rc;
}

// Chains can be hundreds of thousands of blocks long, so destruction walks
// the tail links iteratively; recursion is confined to counters, whose
// nesting depth is the (small) height of the tree.
inline void Num::unref(Node* n) noexcept {
    while (n && --n->rc == 0) {
        Node* next = n->tail.node_;  // inherit the dead node's tail reference
        n->tail.node_ = nullptr;
        delete n;
        n = next;
    }
}

inline Num::~Num() { unref(node_); }

inline Num& Num::operator=(const Num& other) noexcept {
    if (other.node_) ++other.node_->rc;  // first: `other` may sit in our chain
    Node* old = node_;
    node_ = other.node_;
    unref(old);
    return *this;
}

inline Num& Num::operator=(Num&& other) noexcept {
    if (this != &other) {
        Node* old = node_;
        node_ = other.node_;
        other.node_ = nullptr;
        unref(old);
    }
    return *this;
}

inline Kind Num::kind() const { return node_ ? node_->kind : Kind::leaf; }

inline Num zero() { return Num{}; }
inline bool is_positive(const Num& x) { return x.is_positive(); }
inline bool is_odd(const Num& x) { return x.is_odd(); }
inline bool is_even_positive(const Num& x) { return x.is_even_positive(); }

}  // namespace hbn
