#include "fimreg/window.hpp"

#include "fimreg/errors.hpp"

namespace fimreg {

Window::Window(int arity, int cap) : arity_(arity), cap_(cap) {
    if (arity < 1) throw InputError("window arity must be >= 1");
    if (cap < 0) throw InputError("window cap must be >= 0");
    degrees_ = degrees_up_to(arity, cap);
    for (int i = 0; i < static_cast<int>(degrees_.size()); ++i) {
        index_.emplace(degrees_[static_cast<size_t>(i)], i);
    }
}

bool Window::contains(const MultiIndex& n) const {
    return n.arity() == arity_ && index_.count(n) > 0;
}

int Window::id(const MultiIndex& n) const {
    auto it = index_.find(n);
    if (n.arity() != arity_ || it == index_.end()) {
        throw InputError("degree " + n.str() + " outside window (arity " +
                         std::to_string(arity_) + ", cap " + std::to_string(cap_) + ")");
    }
    return it->second;
}

WindowPtr make_window(int arity, int cap) {
    return std::make_shared<const Window>(arity, cap);
}

}  // namespace fimreg
