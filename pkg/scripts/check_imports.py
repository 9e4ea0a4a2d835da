import ast
import importlib
import sys
from pathlib import Path

# calculus is the pure layer: no logging, metrics or outer layers
FORBIDDEN_IN_CALCULUS = ("loguru", "prometheus_client", "fastapi", "click", "src.services", "src.api", "src.cli")


def check_imports(directory: str = "src"):
    """Import every module and report failures"""
    errors = []
    root = Path(directory)

    for path in sorted(root.rglob("*.py")):
        module_path = str(path.relative_to(root.parent)).replace("/", ".")[:-3]
        if module_path.endswith(".__init__"):
            module_path = module_path[: -len(".__init__")]
        try:
            importlib.import_module(module_path)
        except ImportError as e:
            errors.append(f"{module_path}: {str(e)}")

    return errors


def check_layering(directory: str = "src/calculus"):
    """Report calculus modules that import outer layers"""
    errors = []
    for path in sorted(Path(directory).rglob("*.py")):
        tree = ast.parse(path.read_text(encoding="utf-8"))
        for node in ast.walk(tree):
            if isinstance(node, ast.Import):
                names = [alias.name for alias in node.names]
            elif isinstance(node, ast.ImportFrom):
                names = [node.module or ""]
            else:
                continue
            for name in names:
                if name.startswith(FORBIDDEN_IN_CALCULUS):
                    errors.append(f"{path}: imports {name}")
    return errors


if __name__ == "__main__":
    errors = check_imports() + check_layering()
    if errors:
        print("Found import errors:")
        for error in errors:
            print(f"  - {error}")
        sys.exit(1)
    print("No import errors found")
