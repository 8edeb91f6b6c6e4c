//! Solutions from skew braces: the trivial brace on S3 and Z/4 with
//! a∘b = a + b + 2ab.

use birack::biracks::{classify, is_involutive};
use birack::group::Group;
use birack::racks::conj_rack;
use birack::skew_braces::{brace_derived_rack, brace_dot, brace_solution, SkewBrace};

fn main() -> birack::Result<()> {
    let s3 = Group::symmetric3();
    let trivial = SkewBrace::trivial(&s3);
    let r = brace_solution(&trivial)?;
    assert_eq!(brace_derived_rack(&trivial)?, conj_rack(&s3));
    println!("trivial S3 brace: {:?}", classify(&r));

    let z4 = SkewBrace::z4();
    let r = brace_solution(&z4)?;
    println!("Z/4 brace: r(1,1) = {:?}, involutive = {}", r.apply(1, 1), is_involutive(&r));
    println!("dot rows: {:?}", brace_dot(&z4)?.rows());
    println!("derived rack trivial: {}", brace_derived_rack(&z4)?.is_trivial());

    let opposite = SkewBrace::opposite_trivial(&s3)?;
    println!("opposite S3 brace, derived rack rows: {:?}", brace_derived_rack(&opposite)?.table().rows());
    Ok(())
}
