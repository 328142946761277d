#include "gridmorse/gaussint.hpp"

#include <sstream>

#include "gridmorse/errors.hpp"

namespace gridmorse {

GaussInt GaussInt::div_exact(long long k) const {
    if (k == 0 || re % k != 0 || im % k != 0)
        throw Error("inexact Gaussian integer division by " + std::to_string(k));
    return {re / k, im / k};
}

std::string GaussInt::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (re != 0) os << re;
    if (im != 0) {
        if (im > 0 && re != 0) os << '+';
        if (im == -1)
            os << '-';
        else if (im != 1)
            os << im;
        os << 'i';
    }
    return os.str();
}

}  // namespace gridmorse
