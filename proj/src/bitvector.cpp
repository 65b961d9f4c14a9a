#include "ps2c/bitvector.hpp"

#include "ps2c/errors.hpp"

namespace ps2c {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw InvalidArgument("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for_each_set([&](std::size_t i) { s[i] = '1'; });
    return s;
}

}  // namespace ps2c
