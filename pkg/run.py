import uvicorn
from dotenv import load_dotenv

from monoid_bench.config.config_manager import ConfigManager

load_dotenv()

if __name__ == "__main__":
    config = ConfigManager()
    uvicorn.run(
        config.api_app,
        host=config.api_host,
        port=config.api_port,
        reload=config.api_reload
    )
