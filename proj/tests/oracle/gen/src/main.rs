// Oracle keystream generator: reads "cipher keyhex ivhex nbytes" lines, prints hex keystream.
use cipher::{KeyIvInit, StreamCipher};
use std::io::BufRead;

fn ks<C: KeyIvInit + StreamCipher>(key: &[u8], iv: &[u8], n: usize) -> Vec<u8> {
    let mut c = C::new_from_slices(key, iv).expect("bad key/iv");
    let mut buf = vec![0u8; n];
    c.apply_keystream(&mut buf);
    buf
}

fn main() {
    for line in std::io::stdin().lock().lines() {
        let line = line.unwrap();
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 4 { continue; }
        let key = hex::decode(f[1]).unwrap();
        let iv = hex::decode(f[2]).unwrap();
        let n: usize = f[3].parse().unwrap();
        let out = match f[0] {
            "SALSA20_8" => ks::<salsa20::Salsa8>(&key, &iv, n),
            "SALSA20_12" => ks::<salsa20::Salsa12>(&key, &iv, n),
            "SALSA20_20" => ks::<salsa20::Salsa20>(&key, &iv, n),
            "RABBIT" => ks::<rabbit::Rabbit>(&key, &iv, n),
            _ => panic!("unknown cipher"),
        };
        println!("{}", hex::encode(out));
    }
}
