#pragma once

#include <map>
#include <memory>
#include <vector>

#include "fimreg/multiindex.hpp"

namespace fimreg {

/*
 * The finite degree window: all degrees of a fixed arity with total <= N,
 * enumerated in (total, lex) order so that every lower-degree prerequisite
 * of a degree precedes it.  Shared by modules living on the same window.
 */
class Window {
public:
    Window(int arity, int cap);

    int arity() const { return arity_; }
    int cap() const { return cap_; }
    int size() const { return static_cast<int>(degrees_.size()); }
    const std::vector<MultiIndex>& degrees() const { return degrees_; }
    const MultiIndex& at(int id) const { return degrees_[static_cast<size_t>(id)]; }

    bool contains(const MultiIndex& n) const;
    /* Index of n in the (total, lex) enumeration; throws InputError if absent. */
    int id(const MultiIndex& n) const;

private:
    int arity_;
    int cap_;
    std::vector<MultiIndex> degrees_;
    std::map<MultiIndex, int> index_;
};

using WindowPtr = std::shared_ptr<const Window>;

WindowPtr make_window(int arity, int cap);

}  // namespace fimreg
