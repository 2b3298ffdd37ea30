#include "microgringo/store.hh"

namespace mg {

bool AtomStore::insert(const SymbolicAtom &atom, bool fact) {
    if (fact) { facts_.insert(atom); }
    if (!index_.insert(atom).second) { return false; }
    tables_[{atom.pred, atom.args.size()}].push_back({atom, atoms_.size()});
    atoms_.push_back(atom);
    return true;
}

void AtomStore::mark_fact(const SymbolicAtom &atom) { facts_.insert(atom); }

bool AtomStore::is_fact(const SymbolicAtom &atom) const {
    return facts_.find(atom) != facts_.end();
}

bool AtomStore::contains(const SymbolicAtom &atom, View view) const {
    if (view == View::All) { return index_.find(atom) != index_.end(); }
    auto it = tables_.find({atom.pred, atom.args.size()});
    if (it == tables_.end()) { return false; }
    for (const auto &entry : it->second) {
        if (in_view(entry.seq, view) && entry.atom == atom) { return true; }
    }
    return false;
}

std::vector<Substitution> AtomStore::matches(const SymbolicAtom &pattern,
                                             const Substitution &subst, View view) const {
    std::vector<Substitution> result;
    auto it = tables_.find({pattern.pred, pattern.args.size()});
    if (it == tables_.end()) { return result; }
    SymbolicAtom bound = subst.apply(pattern);
    for (const auto &entry : it->second) {
        if (!in_view(entry.seq, view)) { continue; }
        Substitution extension = subst;
        bool ok = true;
        for (std::size_t i = 0; i < bound.args.size() && ok; ++i) {
            ok = match_term(bound.args[i], entry.atom.args[i], extension);
        }
        if (ok) { result.push_back(std::move(extension)); }
    }
    return result;
}

void AtomStore::advance_generation() { new_start_ = atoms_.size(); }

void AtomStore::reset_generation() { new_start_ = 0; }

const std::vector<AtomStore::Entry> &AtomStore::table(SymbolId pred, std::size_t arity) const {
    static const std::vector<Entry> empty;
    auto it = tables_.find({pred, arity});
    return it == tables_.end() ? empty : it->second;
}

} // namespace mg
