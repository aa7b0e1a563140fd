"""Generate the KAT corpus from independent reference implementations."""
import subprocess, sys
sys.path.insert(0, '/root/oracle/py')
from ref import salsa_stream

GEN = '/root/oracle/gen/target/release/gen'
HC = '/root/oracle/c/hc'
SO = '/root/oracle/c/so'
N = 1032
CHECKS = [(0, 63), (192, 255), (448, 511), (1000, 1031)]

def rust(cid, k, iv):
    out = subprocess.run([GEN], input=f"{cid} {k} {iv} {N}\n", capture_output=True, text=True, check=True).stdout
    return bytes.fromhex(out.strip())

def cstream(tool, k, iv):
    out = subprocess.run([tool, k, iv, str(N)], capture_output=True, text=True, check=True).stdout
    return bytes.fromhex(out.strip().splitlines()[-1])

PAT16 = bytes(range(16)).hex()
PAT32 = bytes(range(32)).hex()
RND32 = "0053a6f94c9ff24598eb3e91e4378add3083d6297ccf2275c81b6ec11467ba0d"
RND16 = "0f62b5085bae0154a7fa4da0f34699ec"

records = []  # (source, cipher, key, iv)
for cid in ("SALSA20_12", "SALSA20_8", "SALSA20_20"):
    prov = "RustCrypto salsa20 0.10.2 (%s)" % {"SALSA20_12": "Salsa12", "SALSA20_8": "Salsa8", "SALSA20_20": "Salsa20"}[cid]
    for k, iv in [("00" * 32, "00" * 8), (PAT32, "0001020304050607"), (RND32, "0d74db42a91077de")]:
        records.append((prov, cid, k, iv, rust(cid, k, iv)))
    rounds = int(cid.split('_')[1])
    for k, iv in [("80" + "00" * 15, "00" * 8), (RND16, "288ff65dc42b92f9")]:
        records.append(("Python Salsa20/%d transcription, cross-checked against RustCrypto on 32-byte keys and the published 128-bit-key set 1 vector 0" % rounds,
                        cid, k, iv, salsa_stream(bytes.fromhex(k), bytes.fromhex(iv), N, rounds)))
for k, iv in [("00" * 16, "00" * 8), (PAT16, "c373f575c1267e59"), (RND16, "2717f4d21a56eba6")]:
    records.append(("RustCrypto rabbit 0.4.0", "RABBIT", k, iv, rust("RABBIT", k, iv)))
for k, iv in [("00" * 16, "00" * 16), ("80" + "00" * 15, "00" * 16), (PAT16, bytes(range(16, 32)).hex()), (RND16, "f0e1d2c3b4a5968778695a4b3c2d1e0f")]:
    records.append(("HC-128 eSTREAM reference code (H. Wu)", "HC128", k, iv, cstream(HC, k, iv)))
for k, iv in [("00" * 16, "00" * 16), ("a7c083feb7" + "00" * 11, "00112233445566778899aabbccddeeff"),
              (PAT32, "8899aabbccddeeff0011223344556677"), ("00112233445566778899aabbccddeeff", "8899aabbccddeeff0011223344556677"),
              (RND32[:40], "00" * 15 + "01")]:
    records.append(("SOSEMANUK reference implementation (X-CRYPT 2005, T. Pornin)", "SOSEMANUK", k, iv, cstream(SO, k, iv)))

out = ["# Known-answer vectors for the eSTREAM software portfolio ciphers.",
       "# Every record below was produced by an independent implementation (named on the",
       "# source line above it), not by this library. stream[a..b] ranges are inclusive.", ""]
for prov, cid, k, iv, ks in records:
    assert len(ks) == N
    out.append("# source: " + prov)
    out.append(f"cipher={cid} key={k} iv={iv}")
    for a, b in CHECKS:
        out.append(f"stream[{a}..{b}]={ks[a:b+1].hex()}")
    out.append("")
open(sys.argv[1], "w").write("\n".join(out))
print(len(records), "records")
