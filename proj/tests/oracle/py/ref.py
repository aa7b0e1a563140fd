"""Independent Python transcriptions used only to derive internal-state snapshots.
Keystreams are cross-checked against the RustCrypto crates before use."""
M32 = 0xFFFFFFFF
def rotl(x, n): return ((x << n) | (x >> (32 - n))) & M32
def le_words(b): return [int.from_bytes(b[i:i+4], 'little') for i in range(0, len(b), 4)]
def words_le(ws): return b''.join(w.to_bytes(4, 'little') for w in ws)

# ---- Salsa20
def qr(a, b, c, d):
    b ^= rotl((a + d) & M32, 7); c ^= rotl((b + a) & M32, 9)
    d ^= rotl((c + b) & M32, 13); a ^= rotl((d + c) & M32, 18)
    return a, b, c, d
def double_round(x):
    x = list(x)
    for (i, j, k, l) in [(0,4,8,12),(5,9,13,1),(10,14,2,6),(15,3,7,11)]:
        x[i], x[j], x[k], x[l] = qr(x[i], x[j], x[k], x[l])
    for (i, j, k, l) in [(0,1,2,3),(5,6,7,4),(10,11,8,9),(15,12,13,14)]:
        x[i], x[j], x[k], x[l] = qr(x[i], x[j], x[k], x[l])
    return x
def salsa_input(key, nonce, counter):
    k = le_words(key)
    if len(key) == 32: c = le_words(b"expand 32-byte k"); k1, k2 = k[:4], k[4:]
    else: c = le_words(b"expand 16-byte k"); k1, k2 = k, k
    n = le_words(nonce)
    return [c[0]] + k1 + [c[1]] + n + [counter & M32, counter >> 32] + [c[2]] + k2 + [c[3]]
def salsa_block(inp, rounds):
    x = list(inp)
    for _ in range(rounds // 2): x = double_round(x)
    return words_le([(a + b) & M32 for a, b in zip(x, inp)])
def salsa_stream(key, nonce, n, rounds):
    out = b''; ctr = 0
    while len(out) < n: out += salsa_block(salsa_input(key, nonce, ctr), rounds); ctr += 1
    return out[:n]

# ---- Rabbit
A = [0x4D34D34D, 0xD34D34D3, 0x34D34D34, 0x4D34D34D, 0xD34D34D3, 0x34D34D34, 0x4D34D34D, 0xD34D34D3]
def g(u, v):
    s = (u + v) & M32; sq = s * s
    return (sq ^ (sq >> 32)) & M32
def counter_update(c, carry):
    c = list(c)
    for j in range(8):
        t = c[j] + A[j] + carry
        carry = t >> 32; c[j] = t & M32
    return c, carry
def next_state(x, c, carry):
    c, carry = counter_update(c, carry)
    G = [g(x[j], c[j]) for j in range(8)]
    r16 = lambda v: rotl(v, 16); r8 = lambda v: rotl(v, 8)
    nx = [0]*8
    nx[0] = (G[0] + r16(G[7]) + r16(G[6])) & M32
    nx[1] = (G[1] + r8(G[0]) + G[7]) & M32
    nx[2] = (G[2] + r16(G[1]) + r16(G[0])) & M32
    nx[3] = (G[3] + r8(G[2]) + G[1]) & M32
    nx[4] = (G[4] + r16(G[3]) + r16(G[2])) & M32
    nx[5] = (G[5] + r8(G[4]) + G[3]) & M32
    nx[6] = (G[6] + r16(G[5]) + r16(G[4])) & M32
    nx[7] = (G[7] + r8(G[6]) + G[5]) & M32
    return nx, c, carry
def rabbit_key_setup(key, snapshots=None):
    k = [int.from_bytes(key[2*i:2*i+2], 'little') for i in range(8)]
    x = [0]*8; c = [0]*8
    for j in range(8):
        if j % 2 == 0:
            x[j] = (k[(j+1) % 8] << 16) | k[j]
            c[j] = (k[(j+4) % 8] << 16) | k[(j+5) % 8]
        else:
            x[j] = (k[(j+5) % 8] << 16) | k[(j+4) % 8]
            c[j] = (k[j] << 16) | k[(j+1) % 8]
    carry = 0
    if snapshots is not None: snapshots.append((list(x), list(c), carry))
    for _ in range(4):
        x, c, carry = next_state(x, c, carry)
        if snapshots is not None: snapshots.append((list(x), list(c), carry))
    c = [c[j] ^ x[(j+4) % 8] for j in range(8)]
    return x, c, carry
def rabbit_iv_setup(st, iv):
    x, c, carry = st
    i0 = int.from_bytes(iv[0:4], 'little'); i2 = int.from_bytes(iv[4:8], 'little')
    i1 = ((i2 >> 16) << 16) | (i0 >> 16)
    i3 = ((i2 & 0xFFFF) << 16) | (i0 & 0xFFFF)
    iw = [i0, i1, i2, i3]
    c = [c[j] ^ iw[j % 4] for j in range(8)]
    for _ in range(4): x, c, carry = next_state(x, c, carry)
    return x, c, carry
def rabbit_extract(x):
    lo = lambda v: v & 0xFFFF; hi = lambda v: v >> 16
    h = [lo(x[0]) ^ hi(x[5]), hi(x[0]) ^ lo(x[3]), lo(x[2]) ^ hi(x[7]), hi(x[2]) ^ lo(x[5]),
         lo(x[4]) ^ hi(x[1]), hi(x[4]) ^ lo(x[7]), lo(x[6]) ^ hi(x[3]), hi(x[6]) ^ lo(x[1])]
    return b''.join(v.to_bytes(2, 'little') for v in h)
def rabbit_stream(key, iv, n):
    st = rabbit_key_setup(key)
    if iv is not None: st = rabbit_iv_setup(st, iv)
    out = b''
    while len(out) < n:
        st = next_state(*st); out += rabbit_extract(st[0])
    return out[:n]
