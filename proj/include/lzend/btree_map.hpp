#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>

namespace lzend {

// Ordered map (B+ tree) supporting insert, erase, predecessor and successor.
//
// Every node holds between Fanout/2 and Fanout entries (leaves: key/value pairs,
// inner nodes: children), except the root. Inner node separators are lower bounds:
// child i holds the keys in [sep[i-1], sep[i]).
template<std::unsigned_integral Key, typename Value, std::size_t Fanout = 64>
class BTreeMap {
    static_assert(Fanout >= 4, "fanout must be at least 4");

public:
    struct Entry {
        Key key;
        Value value;
        bool operator==(Entry const&) const = default;
    };

private:
    static constexpr std::size_t max_count_ = Fanout;
    static constexpr std::size_t min_count_ = Fanout / 2;

    struct Node {
        bool const leaf;
        std::uint32_t count = 0;
        explicit Node(bool is_leaf) : leaf(is_leaf) {}
        virtual ~Node() = default;
    };

    // one slot of overflow before a split
    struct Leaf : Node {
        std::array<Key, max_count_ + 1> keys;
        std::array<Value, max_count_ + 1> values;
        Leaf() : Node(true) {}
    };

    struct Inner : Node {
        std::array<Key, max_count_> seps;
        std::array<std::unique_ptr<Node>, max_count_ + 1> children;
        Inner() : Node(false) {}
    };

    struct Split {
        Key sep;
        std::unique_ptr<Node> right;
    };

    std::unique_ptr<Node> root_;
    std::size_t size_ = 0;

    static Leaf* as_leaf(Node* n) { return static_cast<Leaf*>(n); }
    static Leaf const* as_leaf(Node const* n) { return static_cast<Leaf const*>(n); }
    static Inner* as_inner(Node* n) { return static_cast<Inner*>(n); }
    static Inner const* as_inner(Node const* n) { return static_cast<Inner const*>(n); }

    // index of the child whose key range contains k
    static std::size_t child_index(Inner const* in, Key k) {
        return std::upper_bound(in->seps.begin(), in->seps.begin() + (in->count - 1), k) - in->seps.begin();
    }

    static std::optional<Split> insert_into(Node* node, Key k, Value v) {
        if(node->leaf) {
            Leaf* lf = as_leaf(node);
            std::size_t const pos = std::lower_bound(lf->keys.begin(), lf->keys.begin() + lf->count, k) - lf->keys.begin();
            if(pos < lf->count && lf->keys[pos] == k) throw std::logic_error("BTreeMap: duplicate key");
            std::move_backward(lf->keys.begin() + pos, lf->keys.begin() + lf->count, lf->keys.begin() + lf->count + 1);
            std::move_backward(lf->values.begin() + pos, lf->values.begin() + lf->count, lf->values.begin() + lf->count + 1);
            lf->keys[pos] = k;
            lf->values[pos] = std::move(v);
            ++lf->count;
            if(lf->count <= max_count_) return std::nullopt;

            auto right = std::make_unique<Leaf>();
            std::size_t const keep = lf->count / 2;
            right->count = lf->count - keep;
            std::move(lf->keys.begin() + keep, lf->keys.begin() + lf->count, right->keys.begin());
            std::move(lf->values.begin() + keep, lf->values.begin() + lf->count, right->values.begin());
            lf->count = keep;
            Key const sep = right->keys[0];
            return Split{sep, std::move(right)};
        }

        Inner* in = as_inner(node);
        std::size_t const ci = child_index(in, k);
        auto split = insert_into(in->children[ci].get(), k, std::move(v));
        if(!split) return std::nullopt;

        // children[ci+1..] and seps[ci..] shift right by one
        for(std::size_t j = in->count; j > ci + 1; --j) in->children[j] = std::move(in->children[j - 1]);
        std::move_backward(in->seps.begin() + ci, in->seps.begin() + (in->count - 1), in->seps.begin() + in->count);
        in->children[ci + 1] = std::move(split->right);
        in->seps[ci] = split->sep;
        ++in->count;
        if(in->count <= max_count_) return std::nullopt;

        auto right = std::make_unique<Inner>();
        std::size_t const keep = in->count / 2;
        right->count = in->count - keep;
        for(std::size_t j = 0; j < right->count; ++j) right->children[j] = std::move(in->children[keep + j]);
        std::move(in->seps.begin() + keep, in->seps.begin() + (in->count - 1), right->seps.begin());
        Key const sep = in->seps[keep - 1];
        in->count = keep;
        return Split{sep, std::move(right)};
    }

    // merges children[j+1] into children[j]
    static void merge_children(Inner* parent, std::size_t j) {
        Node* left = parent->children[j].get();
        Node* right = parent->children[j + 1].get();
        if(left->leaf) {
            Leaf* l = as_leaf(left);
            Leaf* r = as_leaf(right);
            std::move(r->keys.begin(), r->keys.begin() + r->count, l->keys.begin() + l->count);
            std::move(r->values.begin(), r->values.begin() + r->count, l->values.begin() + l->count);
            l->count += r->count;
        } else {
            Inner* l = as_inner(left);
            Inner* r = as_inner(right);
            l->seps[l->count - 1] = parent->seps[j];
            std::move(r->seps.begin(), r->seps.begin() + (r->count - 1), l->seps.begin() + l->count);
            for(std::size_t c = 0; c < r->count; ++c) l->children[l->count + c] = std::move(r->children[c]);
            l->count += r->count;
        }
        for(std::size_t c = j + 1; c + 1 < parent->count; ++c) parent->children[c] = std::move(parent->children[c + 1]);
        parent->children[parent->count - 1].reset();
        std::move(parent->seps.begin() + j + 1, parent->seps.begin() + (parent->count - 1), parent->seps.begin() + j);
        --parent->count;
    }

    static void borrow_from_left(Inner* parent, std::size_t i) {
        Node* child = parent->children[i].get();
        Node* sib = parent->children[i - 1].get();
        if(child->leaf) {
            Leaf* c = as_leaf(child);
            Leaf* l = as_leaf(sib);
            std::move_backward(c->keys.begin(), c->keys.begin() + c->count, c->keys.begin() + c->count + 1);
            std::move_backward(c->values.begin(), c->values.begin() + c->count, c->values.begin() + c->count + 1);
            c->keys[0] = l->keys[l->count - 1];
            c->values[0] = std::move(l->values[l->count - 1]);
            ++c->count;
            --l->count;
            parent->seps[i - 1] = c->keys[0];
        } else {
            Inner* c = as_inner(child);
            Inner* l = as_inner(sib);
            for(std::size_t j = c->count; j > 0; --j) c->children[j] = std::move(c->children[j - 1]);
            std::move_backward(c->seps.begin(), c->seps.begin() + (c->count - 1), c->seps.begin() + c->count);
            c->children[0] = std::move(l->children[l->count - 1]);
            c->seps[0] = parent->seps[i - 1];
            parent->seps[i - 1] = l->seps[l->count - 2];
            ++c->count;
            --l->count;
        }
    }

    static void borrow_from_right(Inner* parent, std::size_t i) {
        Node* child = parent->children[i].get();
        Node* sib = parent->children[i + 1].get();
        if(child->leaf) {
            Leaf* c = as_leaf(child);
            Leaf* r = as_leaf(sib);
            c->keys[c->count] = r->keys[0];
            c->values[c->count] = std::move(r->values[0]);
            ++c->count;
            std::move(r->keys.begin() + 1, r->keys.begin() + r->count, r->keys.begin());
            std::move(r->values.begin() + 1, r->values.begin() + r->count, r->values.begin());
            --r->count;
            parent->seps[i] = r->keys[0];
        } else {
            Inner* c = as_inner(child);
            Inner* r = as_inner(sib);
            c->children[c->count] = std::move(r->children[0]);
            c->seps[c->count - 1] = parent->seps[i];
            ++c->count;
            parent->seps[i] = r->seps[0];
            for(std::size_t j = 0; j + 1 < r->count; ++j) r->children[j] = std::move(r->children[j + 1]);
            std::move(r->seps.begin() + 1, r->seps.begin() + (r->count - 1), r->seps.begin());
            --r->count;
        }
    }

    static void rebalance(Inner* parent, std::size_t i) {
        if(i > 0 && parent->children[i - 1]->count > min_count_) {
            borrow_from_left(parent, i);
        } else if(i + 1 < parent->count && parent->children[i + 1]->count > min_count_) {
            borrow_from_right(parent, i);
        } else if(i > 0) {
            merge_children(parent, i - 1);
        } else {
            merge_children(parent, i);
        }
    }

    static bool erase_from(Node* node, Key k) {
        if(node->leaf) {
            Leaf* lf = as_leaf(node);
            std::size_t const pos = std::lower_bound(lf->keys.begin(), lf->keys.begin() + lf->count, k) - lf->keys.begin();
            if(pos == lf->count || lf->keys[pos] != k) return false;
            std::move(lf->keys.begin() + pos + 1, lf->keys.begin() + lf->count, lf->keys.begin() + pos);
            std::move(lf->values.begin() + pos + 1, lf->values.begin() + lf->count, lf->values.begin() + pos);
            --lf->count;
            return true;
        }
        Inner* in = as_inner(node);
        std::size_t const ci = child_index(in, k);
        if(!erase_from(in->children[ci].get(), k)) return false;
        if(in->children[ci]->count < min_count_) rebalance(in, ci);
        return true;
    }

    static Entry min_entry(Node const* node) {
        while(!node->leaf) node = as_inner(node)->children[0].get();
        Leaf const* lf = as_leaf(node);
        return {lf->keys[0], lf->values[0]};
    }

    static Entry max_entry(Node const* node) {
        while(!node->leaf) {
            Inner const* in = as_inner(node);
            node = in->children[in->count - 1].get();
        }
        Leaf const* lf = as_leaf(node);
        return {lf->keys[lf->count - 1], lf->values[lf->count - 1]};
    }

    static std::optional<Entry> predecessor_in(Node const* node, Key y) {
        if(node->leaf) {
            Leaf const* lf = as_leaf(node);
            std::size_t const pos = std::upper_bound(lf->keys.begin(), lf->keys.begin() + lf->count, y) - lf->keys.begin();
            if(pos == 0) return std::nullopt;
            return Entry{lf->keys[pos - 1], lf->values[pos - 1]};
        }
        Inner const* in = as_inner(node);
        std::size_t const ci = child_index(in, y);
        if(auto e = predecessor_in(in->children[ci].get(), y)) return e;
        if(ci == 0) return std::nullopt;
        return max_entry(in->children[ci - 1].get());
    }

    static std::optional<Entry> successor_in(Node const* node, Key y) {
        if(node->leaf) {
            Leaf const* lf = as_leaf(node);
            std::size_t const pos = std::lower_bound(lf->keys.begin(), lf->keys.begin() + lf->count, y) - lf->keys.begin();
            if(pos == lf->count) return std::nullopt;
            return Entry{lf->keys[pos], lf->values[pos]};
        }
        Inner const* in = as_inner(node);
        std::size_t const ci = child_index(in, y);
        if(auto e = successor_in(in->children[ci].get(), y)) return e;
        if(ci + 1 == in->count) return std::nullopt;
        return min_entry(in->children[ci + 1].get());
    }

    template<typename F>
    static void visit(Node const* node, F& f) {
        if(node->leaf) {
            Leaf const* lf = as_leaf(node);
            for(std::size_t j = 0; j < lf->count; ++j) f(lf->keys[j], lf->values[j]);
        } else {
            Inner const* in = as_inner(node);
            for(std::size_t j = 0; j < in->count; ++j) visit(in->children[j].get(), f);
        }
    }

    static std::size_t height_of(Node const* node) {
        std::size_t h = 1;
        while(!node->leaf) {
            node = as_inner(node)->children[0].get();
            ++h;
        }
        return h;
    }

public:
    BTreeMap() : root_(std::make_unique<Leaf>()) {}

    BTreeMap(BTreeMap&&) noexcept = default;
    BTreeMap& operator=(BTreeMap&&) noexcept = default;

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    std::size_t height() const { return height_of(root_.get()); }

    // throws std::logic_error if the key is already present
    void insert(Key k, Value v) {
        auto split = insert_into(root_.get(), k, std::move(v));
        if(split) {
            auto new_root = std::make_unique<Inner>();
            new_root->children[0] = std::move(root_);
            new_root->children[1] = std::move(split->right);
            new_root->seps[0] = split->sep;
            new_root->count = 2;
            root_ = std::move(new_root);
        }
        ++size_;
    }

    // returns false if the key is absent
    bool erase(Key k) {
        if(!erase_from(root_.get(), k)) return false;
        --size_;
        if(!root_->leaf && root_->count == 1) {
            auto child = std::move(as_inner(root_.get())->children[0]);
            root_ = std::move(child);
        }
        return true;
    }

    std::optional<Entry> find(Key k) const {
        auto e = predecessor_in(root_.get(), k);
        if(e && e->key == k) return e;
        return std::nullopt;
    }

    bool contains(Key k) const { return find(k).has_value(); }

    // largest key <= y
    std::optional<Entry> predecessor(Key y) const {
        if(empty()) return std::nullopt;
        return predecessor_in(root_.get(), y);
    }

    // smallest key >= y
    std::optional<Entry> successor(Key y) const {
        if(empty()) return std::nullopt;
        return successor_in(root_.get(), y);
    }

    // visits all entries in increasing key order
    template<typename F>
    void for_each(F&& f) const {
        visit(root_.get(), f);
    }
};

} // namespace lzend
