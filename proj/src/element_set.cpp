#include "pipcat/element_set.hpp"

#include <algorithm>
#include <ostream>

#include "pipcat/errors.hpp"

namespace pipcat {

ElementSet::ElementSet(std::initializer_list<int> members) {
    for (int x : members) {
        if (x < 0 || x >= kMaxElements) {
            throw IndexError("element label out of range: " + std::to_string(x));
        }
        insert(x);
    }
}

ElementSet ElementSet::from_members(const std::vector<int>& members) {
    ElementSet s;
    for (int x : members) {
        if (x < 0 || x >= kMaxElements) {
            throw IndexError("element label out of range: " + std::to_string(x));
        }
        s.insert(x);
    }
    return s;
}

std::vector<int> ElementSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int x : *this) {
        out.push_back(x);
    }
    return out;
}

std::string ElementSet::to_string(int base) const {
    std::string out = "{";
    bool first = true;
    for (int x : *this) {
        if (!first) {
            out += ',';
        }
        out += std::to_string(x + base);
        first = false;
    }
    out += '}';
    return out;
}

void sort_canonical(std::vector<ElementSet>& sets) {
    std::sort(sets.begin(), sets.end(), CanonicalLess{});
}

std::ostream& operator<<(std::ostream& os, ElementSet s) {
    return os << s.to_string();
}

}  // namespace pipcat
