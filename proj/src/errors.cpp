#include "asdim/errors.hpp"

namespace asdim {

  std::string ValidationReport::summary(std::size_t limit) const {
    std::string out;
    std::size_t n = 0;
    for (auto const& v : _entries) {
      if (n == limit) {
        out += "... (" + std::to_string(_entries.size() - limit) + " more)\n";
        break;
      }
      out += v.kind + " (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(v.witness[i]);
      }
      out += ")";
      if (!v.detail.empty()) {
        out += ": " + v.detail;
      }
      out += "\n";
      ++n;
    }
    return out;
  }

  void ValidationReport::throw_if_failed(std::string const& context) const {
    if (!ok()) {
      throw ValidationError(context + ":\n" + summary());
    }
  }

}  // namespace asdim
