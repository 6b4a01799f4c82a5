/*
 * Copyright 2026 the ratchip authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "ratchip/int_math.hpp"

namespace ratchip {

Chips checked_add(Chips x, Chips y) {
    Chips r;
    if (__builtin_add_overflow(x, y, &r)) throw ResourceError("integer overflow in addition");
    return r;
}

Chips checked_sub(Chips x, Chips y) {
    Chips r;
    if (__builtin_sub_overflow(x, y, &r)) throw ResourceError("integer overflow in subtraction");
    return r;
}

Chips checked_mul(Chips x, Chips y) {
    Chips r;
    if (__builtin_mul_overflow(x, y, &r)) throw ResourceError("integer overflow in multiplication");
    return r;
}

Chips checked_pow(Chips base, Chips exp) {
    if (exp < 0) throw InputError("checked_pow: negative exponent");
    Chips r = 1;
    while (exp > 0) {
        if (exp & 1) r = checked_mul(r, base);
        exp >>= 1;
        if (exp > 0) base = checked_mul(base, base);
    }
    return r;
}

Chips floor_div(Chips num, Chips den) {
    if (den <= 0) throw InputError("floor_div: denominator must be positive");
    Chips q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

Chips floor_mod(Chips num, Chips den) {
    return num - floor_div(num, den) * den;
}

Chips binomial(Chips n, Chips k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Chips r = 1;
    for (Chips i = 1; i <= k; ++i) {
        // Exact at every step: r * (n-k+i) is divisible by i here.
        r = checked_mul(r, n - k + i) / i;
    }
    return r;
}

}  // namespace ratchip
