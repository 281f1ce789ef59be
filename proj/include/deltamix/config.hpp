#pragma once

#include <sstream>
#include <string>

namespace deltamix {

inline constexpr const char* kToolName = "deltamix";
inline constexpr const char* kToolVersion = "0.1.0";

// All tunables in one place. Every emitted artifact embeds the config line so
// reruns are reproducible byte for byte.
struct RunConfig {
  int horizon = 512;            // default search horizon for time sets
  int enum_max_len = 24;        // word enumeration cap (length)
  int enum_max_alphabet = 4;    // word enumeration cap (alphabet size)
  long long selector_cap = 4096;  // cap on k^|J| selector enumerations
  int tree_depth_cap = 3;
  int tree_family_cap = 64;
  int p_min = 10;               // proximality depth: "close" means <= 2^-p_min
  int eps_min_exp = 2;          // separation threshold 2^-eps_min_exp (1/4)
  int tail_num = 1, tail_den = 2;  // tail window = last tail_num/tail_den of horizon
  double entropy_tol = 1e-9;
  long long power_iter_cap = 100000;
  int distance_window = 64;     // symbols inspected per orbit distance

  std::string line() const {
    std::ostringstream os;
    os << "horizon=" << horizon << " enum_max_len=" << enum_max_len
       << " enum_max_alphabet=" << enum_max_alphabet
       << " selector_cap=" << selector_cap
       << " tree_depth_cap=" << tree_depth_cap
       << " tree_family_cap=" << tree_family_cap << " p_min=" << p_min
       << " eps_min_exp=" << eps_min_exp << " tail=" << tail_num << "/"
       << tail_den << " entropy_tol=" << entropy_tol
       << " power_iter_cap=" << power_iter_cap
       << " distance_window=" << distance_window;
    return os.str();
  }
};

inline std::string tool_line() {
  return std::string(kToolName) + " " + kToolVersion;
}

}  // namespace deltamix
