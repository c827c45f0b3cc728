"""Unsigned arbitrary-precision integers on 64-bit limbs.

Limb order is little endian and the representation is canonical: no
most-significant zero limb is ever stored, so zero is the empty limb tuple.
Values are immutable; every operation returns a new instance.
"""

from __future__ import annotations

from typing import Iterable

LIMB_BITS = 64
LIMB_MASK = (1 << LIMB_BITS) - 1

# 10**19 is the largest power of ten below 2**64, used for decimal codecs.
_DEC_CHUNK_DIGITS = 19
_DEC_CHUNK = 10**_DEC_CHUNK_DIGITS

_HEX_DIGITS = set("0123456789abcdefABCDEF")


def _from_limbs(limbs: list[int]) -> "Natural":
    while limbs and limbs[-1] == 0:
        limbs.pop()
    out = object.__new__(Natural)
    out._limbs = tuple(limbs)
    return out


def _shl_words(words: Iterable[int], shift: int, extra: int) -> list[int]:
    """Shift a word list left by 0..63 bits, appending `extra` carry words."""
    out = []
    carry = 0
    for w in words:
        t = (w << shift) | carry
        out.append(t & LIMB_MASK)
        carry = t >> LIMB_BITS
    for _ in range(extra):
        out.append(carry & LIMB_MASK)
        carry >>= LIMB_BITS
    return out

def _shr_words(words: list[int], shift: int) -> list[int]:
    if shift == 0:
        return list(words)
    out = []
    n = len(words)
    for i in range(n):
        low = words[i] >> shift
        if i + 1 < n:
            low |= (words[i + 1] << (LIMB_BITS - shift)) & LIMB_MASK
        out.append(low)
    return out


def _divmod_word(words: tuple[int, ...] | list[int], divisor: int) -> tuple[list[int], int]:
    quotient = [0] * len(words)
    rem = 0
    for i in range(len(words) - 1, -1, -1):
        cur = (rem << LIMB_BITS) | words[i]
        quotient[i] = cur // divisor
        rem = cur - quotient[i] * divisor
    return quotient, rem


class Natural:
    """An unsigned integer of arbitrary width."""

    __slots__ = ("_limbs",)

    _limbs: tuple[int, ...]

    def __init__(self, value: int = 0) -> None:
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"expected a non-negative int, got {value!r}")
        if value < 0:
            raise ValueError(f"expected a non-negative int, got {value}")
        limbs = []
        while value:
            limbs.append(value & LIMB_MASK)
            value >>= LIMB_BITS
        self._limbs = tuple(limbs)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_bits(cls, positions: Iterable[int]) -> "Natural":
        """Build the value with a 1 bit at each listed position."""
        limbs: list[int] = []
        seen = set()
        for p in positions:
            if not isinstance(p, int) or p < 0:
                raise ValueError(f"bit position must be a non-negative int, got {p!r}")
            if p in seen:
                raise ValueError(f"duplicate bit position {p}")
            seen.add(p)
            idx, off = divmod(p, LIMB_BITS)
            while len(limbs) <= idx:
                limbs.append(0)
            limbs[idx] |= 1 << off
        return _from_limbs(limbs)

    @classmethod
    def from_hex(cls, text: str) -> "Natural":
        s = text.strip()
        if not s or any(c not in _HEX_DIGITS for c in s):
            raise ValueError(f"not a hexadecimal string: {text!r}")
        limbs = []
        i = len(s)
        while i > 0:
            j = max(0, i - 16)
            limbs.append(int(s[j:i], 16))
            i = j
        return _from_limbs(limbs)

    @classmethod
    def from_decimal(cls, text: str) -> "Natural":
        s = text.strip()
        if not s or not s.isascii() or not s.isdigit():
            raise ValueError(f"not a decimal string: {text!r}")
        head = len(s) % _DEC_CHUNK_DIGITS or _DEC_CHUNK_DIGITS
        value = cls(int(s[:head]))
        for i in range(head, len(s), _DEC_CHUNK_DIGITS):
            value = value.mul_small(_DEC_CHUNK).add_small(int(s[i : i + _DEC_CHUNK_DIGITS]))
        return value

    # -- rendering --------------------------------------------------------

    def to_hex(self) -> str:
        if not self._limbs:
            return "0"
        parts = ["%x" % self._limbs[-1]]
        parts.extend("%016x" % w for w in reversed(self._limbs[:-1]))
        return "".join(parts)

    def to_decimal(self) -> str:
        if not self._limbs:
            return "0"
        words = list(self._limbs)
        chunks = []
        while words:
            words, rem = _divmod_word(words, _DEC_CHUNK)
            while words and words[-1] == 0:
                words.pop()
            chunks.append(rem)
        parts = [str(chunks[-1])]
        parts.extend("%019d" % c for c in reversed(chunks[:-1]))
        return "".join(parts)

    def __int__(self) -> int:
        value = 0
        for w in reversed(self._limbs):
            value = (value << LIMB_BITS) | w
        return value

    def __str__(self) -> str:
        return self.to_decimal()

    def __repr__(self) -> str:
        return f"Natural(0x{self.to_hex()})"

    # -- inspection ---------------------------------------------------------

    @property
    def limbs(self) -> tuple[int, ...]:
        return self._limbs

    def bit_length(self) -> int:
        if not self._limbs:
            return 0
        return (len(self._limbs) - 1) * LIMB_BITS + self._limbs[-1].bit_length()

    def bit_positions(self) -> list[int]:
        """Positions of all set bits, ascending."""
        out = []
        for i, limb in enumerate(self._limbs):
            base = i * LIMB_BITS
            while limb:
                low = limb & -limb
                out.append(base + low.bit_length() - 1)
                limb ^= low
        return out

    def trailing_zeros(self) -> int:
        for i, limb in enumerate(self._limbs):
            if limb:
                return i * LIMB_BITS + (limb & -limb).bit_length() - 1
        raise ValueError("trailing_zeros is undefined for zero")

    def is_zero(self) -> bool:
        return not self._limbs

    def is_odd(self) -> bool:
        return bool(self._limbs) and bool(self._limbs[0] & 1)

    def __bool__(self) -> bool:
        return bool(self._limbs)

    def __hash__(self) -> int:
        return hash(self._limbs)

    # -- comparison ---------------------------------------------------------

    def _cmp(self, other: "Natural") -> int:
        a, b = self._limbs, other._limbs
        if len(a) != len(b):
            return -1 if len(a) < len(b) else 1
        for x, y in zip(reversed(a), reversed(b)):
            if x != y:
                return -1 if x < y else 1
        return 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Natural):
            return NotImplemented
        return self._limbs == other._limbs

    def __lt__(self, other: "Natural") -> bool:
        if not isinstance(other, Natural):
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other: "Natural") -> bool:
        if not isinstance(other, Natural):
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other: "Natural") -> bool:
        if not isinstance(other, Natural):
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other: "Natural") -> bool:
        if not isinstance(other, Natural):
            return NotImplemented
        return self._cmp(other) >= 0

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Natural") -> "Natural":
        if not isinstance(other, Natural):
            return NotImplemented
        a, b = self._limbs, other._limbs
        if len(a) < len(b):
            a, b = b, a
        out = []
        carry = 0
        for i in range(len(a)):
            t = a[i] + (b[i] if i < len(b) else 0) + carry
            out.append(t & LIMB_MASK)
            carry = t >> LIMB_BITS
        if carry:
            out.append(carry)
        return _from_limbs(out)

    def __sub__(self, other: "Natural") -> "Natural":
        if not isinstance(other, Natural):
            return NotImplemented
        a, b = self._limbs, other._limbs
        if len(a) < len(b):
            raise ValueError("subtraction would go below zero")
        out = []
        borrow = 0
        for i in range(len(a)):
            t = a[i] - (b[i] if i < len(b) else 0) - borrow
            borrow = 1 if t < 0 else 0
            out.append(t & LIMB_MASK)
        if borrow:
            raise ValueError("subtraction would go below zero")
        return _from_limbs(out)

    def __mul__(self, other: "Natural") -> "Natural":
        if not isinstance(other, Natural):
            return NotImplemented
        a, b = self._limbs, other._limbs
        if not a or not b:
            return ZERO
        if len(a) == 1 and len(b) == 1:
            p = a[0] * b[0]
            return _from_limbs([p & LIMB_MASK, p >> LIMB_BITS])
        out = [0] * (len(a) + len(b))
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            carry = 0
            k = i
            for bj in b:
                t = out[k] + ai * bj + carry
                out[k] = t & LIMB_MASK
                carry = t >> LIMB_BITS
                k += 1
            out[k] = carry
        return _from_limbs(out)

    def add_small(self, word: int) -> "Natural":
        if not isinstance(word, int) or not 0 <= word <= LIMB_MASK:
            raise ValueError(f"expected a 64-bit word, got {word!r}")
        if word == 0:
            return self
        out = list(self._limbs)
        carry = word
        i = 0
        while carry and i < len(out):
            t = out[i] + carry
            out[i] = t & LIMB_MASK
            carry = t >> LIMB_BITS
            i += 1
        if carry:
            out.append(carry)
        return _from_limbs(out)

    def mul_small(self, word: int) -> "Natural":
        if not isinstance(word, int) or not 0 <= word <= LIMB_MASK:
            raise ValueError(f"expected a 64-bit word, got {word!r}")
        if word == 0 or not self._limbs:
            return ZERO
        out = []
        carry = 0
        for w in self._limbs:
            t = w * word + carry
            out.append(t & LIMB_MASK)
            carry = t >> LIMB_BITS
        if carry:
            out.append(carry)
        return _from_limbs(out)

    def rem_small(self, divisor: int) -> int:
        """Remainder modulo a single word, without forming the quotient."""
        if not isinstance(divisor, int) or divisor < 0 or divisor > LIMB_MASK:
            raise ValueError(f"expected a 64-bit word, got {divisor!r}")
        if divisor == 0:
            raise ZeroDivisionError("remainder by zero")
        rem = 0
        for w in reversed(self._limbs):
            rem = ((rem << LIMB_BITS) | w) % divisor
        return rem

    def div_rem(self, other: "Natural") -> tuple["Natural", "Natural"]:
        """Quotient and remainder; long division on normalized limbs."""
        if not isinstance(other, Natural):
            raise ValueError(f"expected a Natural divisor, got {other!r}")
        v = other._limbs
        if not v:
            raise ZeroDivisionError("division by zero")
        if self._cmp(other) < 0:
            return ZERO, self
        if len(v) == 1:
            q, r = _divmod_word(self._limbs, v[0])
            return _from_limbs(q), _from_limbs([r])

        # Normalize so the divisor's top limb has its high bit set; the
        # quotient-digit estimate below is then off by at most two.
        u = self._limbs
        n = len(v)
        m = len(u) - n
        shift = LIMB_BITS - v[-1].bit_length()
        un = _shl_words(u, shift, extra=1)
        vn = _shl_words(v, shift, extra=0)
        vtop = vn[-1]
        vnext = vn[-2]

        q = [0] * (m + 1)
        for j in range(m, -1, -1):
            cur = (un[j + n] << LIMB_BITS) | un[j + n - 1]
            qhat = cur // vtop
            rhat = cur - qhat * vtop
            while qhat > LIMB_MASK or qhat * vnext > ((rhat << LIMB_BITS) | un[j + n - 2]):
                qhat -= 1
                rhat += vtop
                if rhat > LIMB_MASK:
                    break

            borrow = 0
            carry = 0
            for i in range(n):
                p = qhat * vn[i] + carry
                carry = p >> LIMB_BITS
                t = un[i + j] - (p & LIMB_MASK) - borrow
                borrow = 1 if t < 0 else 0
                un[i + j] = t & LIMB_MASK
            t = un[j + n] - carry - borrow
            un[j + n] = t & LIMB_MASK

            if t < 0:
                # Estimate was one too high; add the divisor back once.
                qhat -= 1
                carry = 0
                for i in range(n):
                    t2 = un[i + j] + vn[i] + carry
                    un[i + j] = t2 & LIMB_MASK
                    carry = t2 >> LIMB_BITS
                un[j + n] = (un[j + n] + carry) & LIMB_MASK
            q[j] = qhat

        return _from_limbs(q), _from_limbs(_shr_words(un[:n], shift))

    def __floordiv__(self, other: "Natural") -> "Natural":
        return self.div_rem(other)[0]

    def __mod__(self, other: "Natural") -> "Natural":
        return self.div_rem(other)[1]

    def __lshift__(self, count: int) -> "Natural":
        if not isinstance(count, int) or count < 0:
            raise ValueError(f"shift count must be a non-negative int, got {count!r}")
        if not self._limbs or count == 0:
            return self
        words, bits = divmod(count, LIMB_BITS)
        return _from_limbs([0] * words + _shl_words(self._limbs, bits, extra=1))

    def __rshift__(self, count: int) -> "Natural":
        if not isinstance(count, int) or count < 0:
            raise ValueError(f"shift count must be a non-negative int, got {count!r}")
        words, bits = divmod(count, LIMB_BITS)
        if words >= len(self._limbs):
            return ZERO
        return _from_limbs(_shr_words(list(self._limbs[words:]), bits))


ZERO = Natural(0)
ONE = Natural(1)
TWO = Natural(2)


def _mod_pow_word(base: Natural, exponent: Natural, modulus: int) -> int:
    b = base.rem_small(modulus)
    if exponent.is_zero():
        return 1 % modulus
    if b == 0:
        return 0
    limbs = exponent._limbs
    x = b
    for k in range(exponent.bit_length() - 2, -1, -1):
        x = x * x % modulus
        if (limbs[k // LIMB_BITS] >> (k % LIMB_BITS)) & 1:
            x = x * b % modulus
    return x


def mod_pow(base: Natural, exponent: Natural, modulus: Natural) -> Natural:
    """base ** exponent mod modulus, square-and-multiply from the top bit."""
    if modulus._cmp(TWO) < 0:
        raise ValueError("modulus must be at least 2")
    if len(modulus._limbs) == 1:
        return _from_limbs([_mod_pow_word(base, exponent, modulus._limbs[0])])
    base = base.div_rem(modulus)[1]
    if exponent.is_zero():
        return ONE
    if base.is_zero():
        return ZERO
    limbs = exponent._limbs
    result = base
    for k in range(exponent.bit_length() - 2, -1, -1):
        result = (result * result).div_rem(modulus)[1]
        if (limbs[k // LIMB_BITS] >> (k % LIMB_BITS)) & 1:
            result = (result * base).div_rem(modulus)[1]
    return result
