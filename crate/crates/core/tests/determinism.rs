mod common;

use cliquemin::census::census;
use cliquemin::identities::verify_all;
use cliquemin::search::{blowup_optimize, f_exact, local_search_min_t4};
use common::random_ctf;

fn with_threads<T: Send>(k: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(k).build().unwrap().install(f)
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let g = random_ctf(300, 11);
    let run = || {
        (
            census(&g).unwrap(),
            verify_all(&g).unwrap(),
            f_exact(9).unwrap().without_timing(),
            local_search_min_t4(25, 5, 3_000, 5).unwrap().without_timing(),
            blowup_optimize(23),
        )
    };
    let one = with_threads(1, run);
    for k in [4, 8] {
        assert_eq!(with_threads(k, run), one, "{k} threads");
    }
}
