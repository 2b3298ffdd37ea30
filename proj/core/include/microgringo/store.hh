#ifndef MICROGRINGO_STORE_HH
#define MICROGRINGO_STORE_HH

#include "microgringo/ast.hh"

#include <map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mg {

// Which slice of a store a lookup runs against: atoms inserted before the
// last generation shift, at or after it, or all of them.
enum class View { Old, New, All };

// The four-set atom base (facts / new / old / all) shared by grounding and
// propagation. Insertion order is the enumeration order everywhere.
class AtomStore {
public:
    // Returns true when the atom was not yet present. Atoms inserted as
    // facts are also marked as such.
    bool insert(const SymbolicAtom &atom, bool fact = false);
    // Marks an already-present atom as a fact.
    void mark_fact(const SymbolicAtom &atom);
    bool is_fact(const SymbolicAtom &atom) const;
    bool contains(const SymbolicAtom &atom, View view = View::All) const;

    // All minimal extensions of subst matching pattern against the view,
    // in insertion order.
    std::vector<Substitution> matches(const SymbolicAtom &pattern, const Substitution &subst,
                                      View view) const;

    // (new, old) <- (empty, all): the shift at the end of an iteration
    void advance_generation();
    // (new, old) <- (all, empty): restart enumeration for a new component
    void reset_generation();

    std::size_t size() const { return atoms_.size(); }
    std::size_t fact_count() const { return facts_.size(); }

    // Atoms of one predicate in insertion order; each entry carries its
    // global sequence number.
    struct Entry {
        SymbolicAtom atom;
        std::size_t seq;
    };
    const std::vector<Entry> &table(SymbolId pred, std::size_t arity) const;

    // All atoms in insertion order.
    const std::vector<SymbolicAtom> &atoms() const { return atoms_; }

private:
    bool in_view(std::size_t seq, View view) const {
        switch (view) {
            case View::Old: { return seq < new_start_; }
            case View::New: { return seq >= new_start_; }
            case View::All: { break; }
        }
        return true;
    }

    std::map<std::pair<SymbolId, std::size_t>, std::vector<Entry>> tables_;
    std::vector<SymbolicAtom> atoms_;
    std::unordered_set<SymbolicAtom, SymbolicAtomHash> index_;
    std::unordered_set<SymbolicAtom, SymbolicAtomHash> facts_;
    std::size_t new_start_ = 0;
};

} // namespace mg

#endif
