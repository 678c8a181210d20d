#[test]
fn dbg_tbar_73() {
    use fermat_sieve::frey::Triple;
    use fermat_sieve::kraus::*;
    let t1 = Triple::new(25, 16, 279_841).unwrap();
    for n in [3u32, 9] {
        let tnp = set_tnp(&t1, n, 73).unwrap();
        println!("T_{{{n},73}} = {:?} prov={:?}", tnp.as_vec(), tnp.provenance());
        println!("  mod3 = {:?}", tnp.reduce_mod3().residues());
        println!("  |S'| = {}", set_sprime(&t1, n, 73).unwrap().len());
    }
    let t4 = Triple::new(7, 16, 506_623_120_463).unwrap();
    let tnp = set_tnp(&t4, 9, 109).unwrap();
    println!("T_{{9,109}} = {:?} prov={:?}", tnp.as_vec(), tnp.provenance());
}
