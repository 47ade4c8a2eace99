#pragma once

#include <iosfwd>
#include <string>

#include <gwci/laurent.hpp>
#include <gwci/qseries.hpp>
#include <gwci/ring.hpp>

namespace gwci {

// Human-readable forms. Terms of a class are listed by increasing h-degree,
// Laurent terms by decreasing t-exponent, e.g. "2875*h^3*t^-2 - 5750*h^4*t^-3".
std::string to_string(const BaseClass &b);
std::string to_string(const CohClass &c);
std::string to_string(const LaurentPoly &p);
std::string to_string(const QSeries &s);

std::ostream &operator<<(std::ostream &os, const BaseClass &b);
std::ostream &operator<<(std::ostream &os, const CohClass &c);
std::ostream &operator<<(std::ostream &os, const LaurentPoly &p);
std::ostream &operator<<(std::ostream &os, const QSeries &s);

} // namespace gwci
