#include "deltamix/timeset.hpp"

#include <algorithm>
#include <sstream>

namespace deltamix {

std::string TimeSet::text() const {
  std::ostringstream os;
  os << "horizon " << horizon << "\n";
  os << "members";
  for (int n : members) os << " " << n;
  os << "\n";
  for (const auto& [n, w] : witnesses)
    os << "witness " << n << " " << w.text() << "\n";
  return os.str();
}

}  // namespace deltamix
