#include "monet/perm.hpp"

#include <algorithm>
#include <deque>

namespace monet {

std::vector<Perm> generate_group(const std::vector<Perm>& gens, uint32_t degree,
                                 size_t cap) {
  std::vector<Perm> out;
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> work;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  work.push_back(id);
  out.push_back(id);
  while (!work.empty()) {
    Perm cur = work.front();
    work.pop_front();
    for (const Perm& g : gens) {
      Perm nxt = g.after(cur);
      if (seen.insert(nxt).second) {
        require(out.size() < cap, Errc::CapExceeded,
                "generated group exceeds cap " + std::to_string(cap));
        out.push_back(nxt);
        work.push_back(nxt);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace monet
