#include "hbn/tree.hpp"

#include "hbn/errors.hpp"

namespace hbn {

namespace {

void*& next_of(void* p) { return *static_cast<void**>(p); }

void* free_head = nullptr;
char* slab_cur = nullptr;
char* slab_end = nullptr;

}  // namespace

void* Num::Node::operator new(std::size_t size) {
    if (void* p = free_head) {
        free_head = next_of(p);
        return p;
    }
    if (slab_cur + size > slab_end) {
        // Slabs stay alive for the process lifetime; freed nodes are
        // recycled through the free list.
        std::size_t slab_bytes = size * 4096;
        slab_cur = static_cast<char*>(::operator new(slab_bytes));
        slab_end = slab_cur + slab_bytes;
    }
    void* p = slab_cur;
    slab_cur += size;
    return p;
}

void Num::Node::operator delete(void* p) noexcept {
    next_of(p) = free_head;
    free_head = p;
}

Num Num::cons(Kind kind, Num counter, Num tail) {
    if (kind == Kind::leaf)
        throw DomainError("Num::cons: leaf has no blocks");
    if (tail.kind() == kind)
        throw DomainError("Num::cons: adjacent blocks of the same kind");
    return Num(new Node{kind, std::move(counter), std::move(tail)});
}

Num Num::node(Kind kind, Num counter, std::vector<Num> rest) {
    if (kind == Kind::leaf)
        throw DomainError("Num::node: leaf has no counter");
    Num chain;
    for (std::size_t i = rest.size(); i-- > 0;) {
        Kind ki = i % 2 == 0 ? flip(kind) : kind;
        chain = cons(ki, std::move(rest[i]), std::move(chain));
    }
    return cons(kind, std::move(counter), std::move(chain));
}

const Num& Num::counter() const {
    if (!node_) throw DomainError("Num::counter: zero has no blocks");
    return node_->counter;
}

const Num& Num::tail() const {
    if (!node_) throw DomainError("Num::tail: zero has no blocks");
    return node_->tail;
}

std::vector<Num> Num::rest() const {
    if (!node_) throw DomainError("Num::rest: zero has no blocks");
    std::vector<Num> out;
    for (const Node* p = node_->tail.node_; p; p = p->tail.node_)
        out.push_back(p->counter);
    return out;
}

bool operator==(const Num& a, const Num& b) {
    // Iterate along the block chain; recursion is confined to counters.
    const Num* x = &a;
    const Num* y = &b;
    for (;;) {
        if (x->node_ == y->node_) return true;
        if (!x->node_ || !y->node_) return false;
        if (x->node_->kind != y->node_->kind) return false;
        if (!(x->node_->counter == y->node_->counter)) return false;
        x = &x->node_->tail;
        y = &y->node_->tail;
    }
}

}  // namespace hbn
