use std::ffi::CString;
use std::ptr;

use hmds_ffi::*;

#[test]
fn tiny_budget_is_reported_then_restored() {
    let name = CString::new("gf7_8_4").unwrap();
    let mut code = ptr::null_mut();
    let mut flag = false;
    unsafe {
        assert_eq!(hmds_code_fixture(name.as_ptr(), &mut code), HmdsStatus::Ok);
        hmds_set_budget(100);
        assert_eq!(hmds_is_list_decodable(code, 4, 3, &mut flag, ptr::null_mut()), HmdsStatus::BudgetExceeded);
        hmds_set_budget(0);
        assert_eq!(hmds_is_list_decodable(code, 4, 3, &mut flag, ptr::null_mut()), HmdsStatus::Ok);
        hmds_code_free(code);
    }
}
